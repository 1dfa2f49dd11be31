/// Evaluated bound: a squared-distance value and the fidelity floor it implies.
///
/// `equation_id` names which closed-form bound was instantiated, `inputs_echo`
/// carries every numeric input so a report row can be re-verified without
/// context, and `notes` records regime flags such as capping at 2.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub equation_id: String,
    pub distance_sq: f64,
    pub fidelity_lb: f64,
    pub inputs_echo: Vec<(String, f64)>,
    pub notes: Vec<String>,
}

impl BoundReport {
    /// Build a report from a raw squared-distance value.
    ///
    /// When `unit_vectors` is set the distance is between two unit vectors
    /// under unitaries and is capped at 2, with a note when the cap bites.
    pub fn from_distance_sq(
        equation_id: &str,
        raw_distance_sq: f64,
        unit_vectors: bool,
        inputs_echo: Vec<(String, f64)>,
    ) -> Self {
        let mut notes = Vec::new();
        let distance_sq = if unit_vectors && raw_distance_sq > 2.0 {
            notes.push("capped at 2".to_string());
            2.0
        } else {
            raw_distance_sq
        };
        let fidelity_lb = (1.0 - distance_sq).max(0.0);
        Self {
            equation_id: equation_id.to_string(),
            distance_sq,
            fidelity_lb,
            inputs_echo,
            notes,
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.notes.push(note.to_string());
        self
    }
}

/// Convenience for building the `inputs_echo` list.
pub fn echo(pairs: &[(&str, f64)]) -> Vec<(String, f64)> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_and_fidelity_consistency() {
        let r = BoundReport::from_distance_sq("test", 3.7, true, vec![]);
        assert_eq!(r.distance_sq, 2.0);
        assert_eq!(r.fidelity_lb, 0.0);
        assert_eq!(r.notes, vec!["capped at 2".to_string()]);

        let r = BoundReport::from_distance_sq("test", 0.25, true, vec![]);
        assert_eq!(r.distance_sq, 0.25);
        assert_eq!(r.fidelity_lb, 0.75);
        assert!(r.notes.is_empty());
    }
}
