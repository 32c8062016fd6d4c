use crate::error::Error;

/// Parameters of an (s, t, n) local rank modulation scheme.
///
/// `n` cells sit on a cycle. Sliding windows of `t` consecutive cells start at
/// every multiple of `s`, so there are `n / s` windows and each cell is
/// covered by at least one of them.
///
/// Invariants: `1 <= s <= t <= n` and `s` divides `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LrmParams {
    s: usize,
    t: usize,
    n: usize,
}

impl LrmParams {
    pub fn new(s: usize, t: usize, n: usize) -> Result<Self, Error> {
        if s < 1 || s > t || t > n || !n.is_multiple_of(s) {
            return Err(Error::InvalidParams { s, t, n });
        }
        Ok(Self { s, t, n })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of windows, `n / s`.
    pub fn window_count(&self) -> usize {
        self.n / self.s
    }

    /// Cells of window `i`: positions `i*s, i*s + 1, ..., i*s + t - 1`, mod n.
    pub fn window_cells(&self, i: usize) -> Result<Vec<usize>, Error> {
        if i >= self.window_count() {
            return Err(Error::IndexOutOfRange {
                what: "window",
                index: i,
                len: self.window_count(),
            });
        }
        let start = i * self.s;
        Ok((0..self.t).map(|k| (start + k) % self.n).collect())
    }

    /// Whether cell `j` lies in window `i`. Both indices must be in range.
    fn window_contains(&self, i: usize, j: usize) -> bool {
        (j + self.n - (i * self.s) % self.n) % self.n < self.t
    }

    /// All cells sharing at least one window with cell `j`, excluding `j`
    /// itself, in increasing order.
    pub fn comparable_cells(&self, j: usize) -> Result<Vec<usize>, Error> {
        if j >= self.n {
            return Err(Error::IndexOutOfRange {
                what: "cell",
                index: j,
                len: self.n,
            });
        }
        let mut seen = vec![false; self.n];
        for i in 0..self.window_count() {
            if self.window_contains(i, j) {
                for cell in self.window_cells(i)? {
                    seen[cell] = true;
                }
            }
        }
        seen[j] = false;
        Ok((0..self.n).filter(|&c| seen[c]).collect())
    }
}
