use super::{BaseWord13, Parity, Symbol13, TernaryWord};

/// Successor symbol values by (parity class, ternary digit): row 0 is the
/// even class, row 1 the odd class. Digit 0 always lands on an even symbol
/// and digit 2 always on an odd one; digit 1 preserves nothing in
/// particular, which is what makes it useless as a decoding anchor.
const NEXT: [[u8; 3]; 2] = [
    [0, 1, 3], // after an even symbol
    [2, 4, 5], // after an odd symbol
];

/// Ternary digit of each symbol value: the column of `NEXT` it sits in.
const COLUMN: [u8; 6] = [0, 1, 0, 2, 1, 2];

fn row(parity: Parity) -> usize {
    match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

/// The symbol following a symbol of the given parity under digit `digit`.
///
/// Panics if `digit > 2`.
pub fn next_symbol(parity: Parity, digit: u8) -> Symbol13 {
    assert!(digit <= 2, "ternary digit out of range: {digit}");
    Symbol13::new(NEXT[row(parity)][digit as usize]).expect("table values are symbols")
}

/// Encodes a base-word as the ternary word of its succession digits:
/// digit `i` selects `word[i + 1]` among the three successors of `word[i]`.
pub fn encode(word: &BaseWord13) -> TernaryWord {
    let n = word.len();
    let digits = (0..n)
        .map(|i| COLUMN[word.symbols()[(i + 1) % n].value() as usize])
        .collect();
    TernaryWord::new(digits).expect("one digit per symbol")
}

/// Why a ternary word decodes to no base-word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum IllegalCodeword {
    /// The all-ones word fixes no parity anywhere, so it is excluded.
    #[error("the all-ones word is not a codeword")]
    AllOnes,

    /// Propagating the digits around the cycle contradicts the parity the
    /// anchor digit promised.
    #[error("digits are inconsistent with the anchor parity")]
    ParityMismatch,
}

/// Decodes a ternary word back to the unique base-word it encodes.
///
/// A digit 0 forces the next symbol to be even and a digit 2 forces it odd,
/// so the first non-1 digit anchors one symbol's parity; from there the
/// digits determine every symbol in turn around the cycle.
pub fn decode(code: &TernaryWord) -> Result<BaseWord13, IllegalCodeword> {
    let mut symbols = vec![0u8; code.len()];
    decode_values(code.digits(), &mut symbols)?;
    Ok(BaseWord13::from_values(&symbols).expect("decoded words satisfy succession"))
}

/// Decoding core on raw digits; writes symbol values into `out`.
pub(crate) fn decode_values(digits: &[u8], out: &mut [u8]) -> Result<(), IllegalCodeword> {
    let n = digits.len();
    debug_assert_eq!(out.len(), n);
    let Some(r) = digits.iter().position(|&d| d != 1) else {
        return Err(IllegalCodeword::AllOnes);
    };
    // digits[r] != 1 pins the parity of the symbol at r + 1: digit 0 lands
    // on an even symbol, digit 2 on an odd one.
    let anchor = (r + 1) % n;
    let anchored_even = digits[r] == 0;
    let mut parity_even = anchored_even;
    // Fill anchor+1, anchor+2, ..., wrapping around to the anchor itself,
    // then confirm the promised parity.
    for step in 1..=n {
        let k = (anchor + step) % n;
        let digit = digits[(k + n - 1) % n];
        let value = NEXT[if parity_even { 0 } else { 1 }][digit as usize];
        out[k] = value;
        parity_even = value.is_multiple_of(2);
    }
    if parity_even != anchored_even {
        return Err(IllegalCodeword::ParityMismatch);
    }
    Ok(())
}

/// Whether `code` is a legal codeword: it decodes, and the decoded word is
/// realizable.
pub fn is_legal(code: &TernaryWord) -> bool {
    match decode(code) {
        Ok(word) => word.is_realizable(),
        Err(_) => false,
    }
}
