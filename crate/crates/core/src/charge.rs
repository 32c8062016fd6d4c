use crate::error::Error;
use crate::params::LrmParams;

/// Absolute charge levels of the `n` cells.
///
/// Only relative order matters to demodulation, so levels are plain integers.
/// Within every window all levels are distinct; across windows ties are fine.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChargeConfig {
    levels: Vec<i64>,
}

impl ChargeConfig {
    /// Validates length and in-window distinctness.
    pub fn new(params: &LrmParams, levels: Vec<i64>) -> Result<Self, Error> {
        if levels.len() != params.n() {
            return Err(Error::LengthMismatch {
                what: "charge configuration",
                expected: params.n(),
                got: levels.len(),
            });
        }
        for i in 0..params.window_count() {
            let cells = params.window_cells(i)?;
            for a in 0..cells.len() {
                for b in a + 1..cells.len() {
                    if cells[a] != cells[b] && levels[cells[a]] == levels[cells[b]] {
                        return Err(Error::TiedWindow { window: i });
                    }
                }
            }
        }
        Ok(Self { levels })
    }

    pub fn levels(&self) -> &[i64] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// Raises cell `j` strictly above every cell comparable to it (sharing a
/// window with it), leaving all other levels untouched. The cell is set to
/// one more than the comparable maximum even if it was already on top, so the
/// result depends only on the relative order of the input.
pub fn push_to_top(
    params: &LrmParams,
    config: &ChargeConfig,
    j: usize,
) -> Result<ChargeConfig, Error> {
    if config.levels().len() != params.n() {
        return Err(Error::LengthMismatch {
            what: "charge configuration",
            expected: params.n(),
            got: config.levels().len(),
        });
    }
    let comparable = params.comparable_cells(j)?;
    let mut levels = config.levels().to_vec();
    if let Some(top) = comparable.iter().map(|&c| levels[c]).max() {
        levels[j] = top + 1;
    }
    ChargeConfig::new(params, levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_length_and_ties() {
        let p = LrmParams::new(1, 2, 4).unwrap();
        assert!(ChargeConfig::new(&p, vec![0, 1, 2]).is_err());
        assert_eq!(
            ChargeConfig::new(&p, vec![0, 5, 5, 1]).unwrap_err(),
            Error::TiedWindow { window: 1 }
        );
        // A tie between cells that never share a window is allowed.
        let p2 = LrmParams::new(2, 2, 4).unwrap();
        assert!(ChargeConfig::new(&p2, vec![0, 1, 0, 1]).is_ok());
    }

    #[test]
    fn push_raises_above_neighbours() {
        let p = LrmParams::new(1, 2, 4).unwrap();
        let cfg = ChargeConfig::new(&p, vec![1, 3, 2, 0]).unwrap();
        let pushed = push_to_top(&p, &cfg, 3).unwrap();
        assert_eq!(pushed.levels(), &[1, 3, 2, 3]);
    }

    #[test]
    fn push_is_unconditional() {
        // Cell 1 is already on top of its comparable cells; its level is
        // still rewritten to comparable-max + 1.
        let p = LrmParams::new(1, 2, 4).unwrap();
        let cfg = ChargeConfig::new(&p, vec![1, 3, 2, 0]).unwrap();
        let pushed = push_to_top(&p, &cfg, 1).unwrap();
        assert_eq!(pushed.levels(), &[1, 3, 2, 0]);
    }

    #[test]
    fn push_with_wide_windows() {
        let p = LrmParams::new(1, 3, 6).unwrap();
        let cfg = ChargeConfig::new(&p, vec![5, 2, 4, 1, 3, 0]).unwrap();
        let pushed = push_to_top(&p, &cfg, 0).unwrap();
        // Comparable cells of 0 are {1, 2, 4, 5}; their max is 4.
        assert_eq!(pushed.levels(), &[5, 2, 4, 1, 3, 0]);
        let pushed = push_to_top(&p, &cfg, 3).unwrap();
        assert_eq!(pushed.levels(), &[5, 2, 4, 5, 3, 0]);
    }

    #[test]
    fn push_rejects_out_of_range_cell() {
        let p = LrmParams::new(1, 2, 4).unwrap();
        let cfg = ChargeConfig::new(&p, vec![1, 3, 2, 0]).unwrap();
        assert!(push_to_top(&p, &cfg, 4).is_err());
    }
}
