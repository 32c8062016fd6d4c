use std::collections::HashSet;
use std::fmt;

use super::{codec, KahnScratch, Symbol13};
use crate::budget::SearchBudget;
use crate::error::Error;

/// How to count the legal codewords of length `n`.
///
/// `Orders` enumerates the `n!` total charge orders and collects the distinct
/// base-words they demodulate to; `Scan` walks all `3^n` ternary words and
/// tests each for legality. The two enumerate completely different spaces,
/// so their agreement is a strong correctness check (`Both`); `Auto` picks
/// whichever space is smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Auto,
    Orders,
    Scan,
    Both,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Auto => "auto",
            CountMethod::Orders => "orders",
            CountMethod::Scan => "scan",
            CountMethod::Both => "both",
        })
    }
}

/// Number of legal codewords of one length, with the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub method: CountMethod,
    /// Legal codewords (equivalently, realizable base-words).
    pub legal: u64,
    /// All ternary words: 3^n.
    pub total: u64,
}

impl CountReport {
    /// The rate `legal / total` as a reduced fraction.
    pub fn rate(&self) -> (u64, u64) {
        let g = gcd(self.legal, self.total).max(1);
        (self.legal / g, self.total / g)
    }

    /// The rate rounded to six decimal places.
    pub fn rate_decimal(&self) -> String {
        let micro =
            (self.legal as u128 * 1_000_000 + self.total as u128 / 2) / self.total as u128;
        if micro >= 1_000_000 {
            "1.000000".to_string()
        } else {
            format!("0.{micro:06}")
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, u64::checked_mul)
}

fn pow3(n: usize) -> Option<u64> {
    u32::try_from(n).ok().and_then(|n| 3u64.checked_pow(n))
}

fn check_n(n: usize) -> Result<(), Error> {
    if n < 3 {
        Err(Error::InvalidParams { s: 1, t: 3, n })
    } else {
        Ok(())
    }
}

/// Counts legal codewords by enumerating all `n!` total charge orders and
/// demodulating each; the distinct base-words are exactly the realizable
/// ones. Costs `n!` budget nodes.
pub fn count_by_orders(n: usize, budget: SearchBudget) -> Result<CountReport, Error> {
    check_n(n)?;
    let cost = factorial(n).unwrap_or(u64::MAX);
    if cost > budget.max_nodes() {
        return Err(budget.refuse(cost).into());
    }
    // cost <= the budget (a u64), so n <= 20 and packed words fit in u64.
    let mut seen: HashSet<u64> = HashSet::new();
    let mut levels: Vec<i64> = (0..n as i64).collect();
    let pack = |levels: &[i64]| -> u64 {
        (0..n).fold(0u64, |key, w| {
            let sym = Symbol13::from_ranking(
                levels[w],
                levels[(w + 1) % n],
                levels[(w + 2) % n],
            )
            .expect("total orders have no ties");
            key << 3 | sym.value() as u64
        })
    };
    // Heap's algorithm over all permutations of the levels.
    seen.insert(pack(&levels));
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                levels.swap(0, i);
            } else {
                levels.swap(c[i], i);
            }
            seen.insert(pack(&levels));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CountReport {
        n,
        method: CountMethod::Orders,
        legal: seen.len() as u64,
        total: pow3(n).expect("3^n fits when n! does"),
    })
}

/// Counts legal codewords by scanning all `3^n` ternary words, splitting the
/// range over `workers` threads (each word is tested independently, so the
/// split does not affect the result). Costs `3^n` budget nodes.
pub fn count_by_scan(n: usize, budget: SearchBudget, workers: usize) -> Result<CountReport, Error> {
    check_n(n)?;
    let total = pow3(n).unwrap_or(u64::MAX);
    if total > budget.max_nodes() {
        return Err(budget.refuse(total).into());
    }
    let workers = workers.max(1).min(total.max(1) as usize);
    let base = total / workers as u64;
    let rem = total % workers as u64;
    let legal = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|k| {
                let start = k * base + k.min(rem);
                let end = start + base + u64::from(k < rem);
                scope.spawn(move || scan_range(n, start, end))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .sum()
    });
    Ok(CountReport {
        n,
        method: CountMethod::Scan,
        legal,
        total,
    })
}

/// Tests every ternary word with index in `start..end` for legality.
fn scan_range(n: usize, start: u64, end: u64) -> u64 {
    let mut digits = vec![0u8; n];
    let mut idx = start;
    for d in digits.iter_mut() {
        *d = (idx % 3) as u8;
        idx /= 3;
    }
    let mut scratch = KahnScratch::default();
    scratch.values_mut().resize(n, 0);
    let mut legal = 0u64;
    for counter in start..end {
        if codec::decode_values(&digits, scratch.values_mut()).is_ok()
            && scratch.is_realizable()
        {
            legal += 1;
        }
        if counter + 1 < end {
            for d in digits.iter_mut() {
                if *d == 2 {
                    *d = 0;
                } else {
                    *d += 1;
                    break;
                }
            }
        }
    }
    legal
}

/// Counts legal codewords for every `n` in `from..=to`.
///
/// `Auto` picks orders when `n!` is no bigger than `3^n` and scan otherwise;
/// `Both` runs both methods and errors with [`Error::CountMismatch`] if they
/// ever disagree.
pub fn rate_table(
    from: usize,
    to: usize,
    method: CountMethod,
    budget: SearchBudget,
    workers: usize,
) -> Result<Vec<CountReport>, Error> {
    check_n(from)?;
    if from > to {
        return Err(Error::InvalidParams { s: 1, t: 3, n: to });
    }
    let mut reports = Vec::with_capacity(to - from + 1);
    for n in from..=to {
        let report = match method {
            CountMethod::Orders => count_by_orders(n, budget)?,
            CountMethod::Scan => count_by_scan(n, budget, workers)?,
            CountMethod::Auto => {
                let orders_cheaper = match (factorial(n), pow3(n)) {
                    (Some(f), Some(p)) => f <= p,
                    (Some(_), None) => true,
                    _ => false,
                };
                if orders_cheaper {
                    count_by_orders(n, budget)?
                } else {
                    count_by_scan(n, budget, workers)?
                }
            }
            CountMethod::Both => {
                let orders = count_by_orders(n, budget)?;
                let scan = count_by_scan(n, budget, workers)?;
                if orders.legal != scan.legal {
                    return Err(Error::CountMismatch {
                        n,
                        orders: orders.legal,
                        scan: scan.legal,
                    });
                }
                CountReport {
                    method: CountMethod::Both,
                    ..orders
                }
            }
        };
        reports.push(report);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_length_has_six_words() {
        let report = count_by_orders(3, SearchBudget::default()).unwrap();
        assert_eq!((report.legal, report.total), (6, 27));
        assert_eq!(report.rate(), (2, 9));
        assert_eq!(report.rate_decimal(), "0.222222");
    }

    #[test]
    fn methods_agree_on_small_lengths() {
        for n in 3..=6 {
            let orders = count_by_orders(n, SearchBudget::default()).unwrap();
            let scan = count_by_scan(n, SearchBudget::default(), 1).unwrap();
            assert_eq!(orders.legal, scan.legal, "n={n}");
            assert_eq!(orders.total, scan.total, "n={n}");
        }
    }

    #[test]
    fn worker_split_does_not_change_the_count() {
        for workers in [1, 2, 3, 7] {
            let report = count_by_scan(6, SearchBudget::default(), workers).unwrap();
            assert_eq!(report.legal, 426, "workers={workers}");
        }
    }

    #[test]
    fn budget_refuses_oversized_jobs() {
        let err = count_by_scan(30, SearchBudget::default(), 1).unwrap_err();
        assert!(matches!(err, Error::Budget(b) if b.needed == 3u64.pow(30)));
        let err = count_by_orders(30, SearchBudget::default()).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }

    #[test]
    fn auto_picks_orders_up_to_six() {
        let reports = rate_table(5, 7, CountMethod::Auto, SearchBudget::default(), 2).unwrap();
        assert_eq!(reports[0].method, CountMethod::Orders);
        assert_eq!(reports[1].method, CountMethod::Orders);
        assert_eq!(reports[2].method, CountMethod::Scan);
        assert_eq!(reports[0].legal, 120);
        assert_eq!(reports[1].legal, 426);
        assert_eq!(reports[2].legal, 1512);
    }

    #[test]
    fn both_reports_both() {
        let reports = rate_table(4, 4, CountMethod::Both, SearchBudget::default(), 1).unwrap();
        assert_eq!(reports[0].method, CountMethod::Both);
        assert_eq!(reports[0].legal, 24);
    }

    #[test]
    fn rejects_tiny_lengths() {
        assert!(count_by_orders(2, SearchBudget::default()).is_err());
        assert!(count_by_scan(0, SearchBudget::default(), 1).is_err());
    }
}
