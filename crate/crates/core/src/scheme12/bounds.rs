use num_rational::Rational64;

/// Upper bounds on the length of a cyclic weight-2 Gray code for the
/// (1, 2, n) scheme, for `n >= 4`.
///
/// The first bound counts states minus a deficiency term and is generally
/// fractional: `C(n, 2) - (n - 3)(n - 5) / 8`. The second is the tight
/// structural bound `2n` (met with equality by [`construct_2n_code`] for
/// `n >= 5`). The second is strictly smaller from `n = 7` on.
///
/// [`construct_2n_code`]: super::construct_2n_code
pub fn upper_bounds(n: usize) -> (Rational64, usize) {
    let n_i = n as i64;
    let states = Rational64::from_integer(n_i * (n_i - 1) / 2);
    let deficiency = Rational64::new((n_i - 3) * (n_i - 5), 8);
    (states - deficiency, 2 * n)
}
