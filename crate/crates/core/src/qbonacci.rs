//! Higher-order Fibonacci numbers and their growth machinery.
//!
//! `fib_q(q, t)` is the order-`q` Fibonacci generalization: each term is the
//! sum of the previous `q`. It counts, among other things, the subsequences
//! of a cyclic lineup that first become synthesizable at time `t`, and the
//! length-`t` binary strings avoiding `q` consecutive zeros (shifted by one).
//! Counting is exact and generic over the scalar; the growth root is computed
//! in floating point with an explicit residual.

use std::fmt;

use crate::scalar::{Count, RealScalar};

/// The `t`-th q-bonacci number: 0 for `t < 0`, 1 at `t = 0`, then the sum of
/// the previous `q` values. Equals `2^(t-1)` on `1 <= t <= q`.
pub fn fib_q<T: Count>(q: u32, t: i64) -> T {
    assert!(q >= 1, "q-bonacci order must be at least 1");
    if t < 0 {
        return T::zero();
    }
    let t = t as usize;
    let mut values: Vec<T> = Vec::with_capacity(t + 1);
    values.push(T::one());
    let mut window_sum = T::one(); // sum of the last min(q, len) values
    for s in 1..=t {
        let next = window_sum.clone();
        values.push(next.clone());
        window_sum = window_sum + &values[s];
        if s >= q as usize {
            window_sum = window_sum - &values[s - q as usize];
        }
    }
    values.pop().expect("at least one value")
}

/// Prefix sum `fib_q(q, 0) + ... + fib_q(q, t)`: the number of distinct
/// subsequences of the length-`t` cyclic lineup over `q` symbols. Negative
/// `t` is unrepresentable by construction.
pub fn prefix_sum_fib_q<T: Count>(q: u32, t: u64) -> T {
    assert!(q >= 1, "q-bonacci order must be at least 1");
    let t = t as usize;
    let mut values: Vec<T> = vec![T::one()];
    let mut window_sum = T::one();
    let mut total = T::one();
    for s in 1..=t {
        let next = window_sum.clone();
        total = total + &next;
        values.push(next);
        window_sum = window_sum + &values[s];
        if s >= q as usize {
            window_sum = window_sum - &values[s - q as usize];
        }
    }
    total
}

/// How a root value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMethod {
    Bisection,
    ContinuedFraction,
}

impl fmt::Display for RootMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootMethod::Bisection => write!(f, "bisect"),
            RootMethod::ContinuedFraction => write!(f, "cfrac"),
        }
    }
}

/// A computed root with its defect against `z = 2 - z^(-q)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult<F = crate::Real> {
    pub value: F,
    pub method: RootMethod,
    /// `|2 - value^(-q) - value|`.
    pub residual: F,
    pub iterations: u32,
}

fn growth_defect<F: RealScalar>(q: u32, z: F) -> F {
    let two = F::from_u8(2).unwrap();
    two - z.powi(-(q as i32)) - z
}

/// Dominant growth root of the q-bonacci recurrence: the root of
/// `z = 2 - z^(-q)` inside `[2(1 - 2^(-q)), 2]`, found by bisection run
/// until the residual drops to `tol`.
///
/// The bracket is analytically valid for every `q >= 1`; for `q = 1` the
/// root is the left endpoint (exactly 1, a double root), included as an
/// extension of the usual `q >= 2` range. The reported residual can stay
/// above `tol` only when the scalar runs out of precision.
pub fn growth_root<F: RealScalar>(q: u32, tol: F) -> RootResult<F> {
    assert!(q >= 1, "q-bonacci order must be at least 1");
    assert!(tol > F::zero(), "tolerance must be positive");
    let two = F::from_u8(2).unwrap();
    let mut left = two * (F::one() - two.powi(-(q as i32)));
    let mut right = two;

    let f_left = growth_defect(q, left);
    if f_left.abs() <= tol {
        return RootResult {
            value: left,
            method: RootMethod::Bisection,
            residual: f_left.abs(),
            iterations: 0,
        };
    }
    // Invariant: f(left) >= 0 >= f(right).
    let mut mid = left;
    let mut residual = f_left.abs();
    let mut iterations = 0;
    while iterations < 20_000 {
        let next = (left + right) / two;
        if next <= left || next >= right {
            break; // interval exhausted at this precision
        }
        mid = next;
        iterations += 1;
        let fm = growth_defect(q, mid);
        residual = fm.abs();
        if residual <= tol {
            break;
        }
        if fm > F::zero() {
            left = mid;
        } else {
            right = mid;
        }
    }
    RootResult {
        value: mid,
        method: RootMethod::Bisection,
        residual,
        iterations,
    }
}

/// The same root by the continued-fraction (fixed-point) iteration
/// `x <- 2 - x^(-q)`, started at 2 and run exactly `iterations` times.
pub fn growth_root_cfrac<F: RealScalar>(q: u32, iterations: u32) -> RootResult<F> {
    assert!(q >= 1, "q-bonacci order must be at least 1");
    assert!(iterations >= 1, "at least one iteration");
    let two = F::from_u8(2).unwrap();
    let mut x = two;
    for _ in 0..iterations {
        x = two - x.powi(-(q as i32));
    }
    RootResult {
        value: x,
        method: RootMethod::ContinuedFraction,
        residual: growth_defect(q, x).abs(),
        iterations,
    }
}

/// Continued-fraction iteration run until the residual drops to `tol`,
/// capped at `max_iterations`.
pub fn growth_root_cfrac_until<F: RealScalar>(
    q: u32,
    tol: F,
    max_iterations: u32,
) -> RootResult<F> {
    assert!(q >= 1, "q-bonacci order must be at least 1");
    assert!(tol > F::zero(), "tolerance must be positive");
    assert!(max_iterations >= 1, "at least one iteration");
    let two = F::from_u8(2).unwrap();
    let mut x = two;
    let mut iterations = 0;
    let mut residual = growth_defect(q, x).abs();
    while iterations < max_iterations {
        x = two - x.powi(-(q as i32));
        iterations += 1;
        residual = growth_defect(q, x).abs();
        if residual <= tol {
            break;
        }
    }
    RootResult {
        value: x,
        method: RootMethod::ContinuedFraction,
        residual,
        iterations,
    }
}

/// The root of `z^q + ... + z - 1` in `(0, 1)`, the reciprocal of
/// [`growth_root`]. For `q = 1` the polynomial degenerates to `z - 1` and
/// the function returns exactly 1.
pub fn reciprocal_root<F: RealScalar>(q: u32, tol: F) -> F {
    assert!(q >= 1, "q-bonacci order must be at least 1");
    assert!(tol > F::zero(), "tolerance must be positive");
    if q == 1 {
        return F::one();
    }
    // Horner form: p(z) = ((..(z + 1)z + 1)..)z - 1, increasing on (0, 1)
    // with p(0) = -1 and p(1) = q - 1 > 0.
    let eval = |z: F| {
        let mut acc = F::one();
        for _ in 1..q {
            acc = acc * z + F::one();
        }
        acc * z - F::one()
    };
    let two = F::from_u8(2).unwrap();
    let mut left = F::zero();
    let mut right = F::one();
    let mut mid = right / two;
    for _ in 0..20_000 {
        let next = (left + right) / two;
        if next <= left || next >= right {
            break;
        }
        mid = next;
        let pm = eval(mid);
        if pm.abs() <= tol {
            break;
        }
        if pm < F::zero() {
            left = mid;
        } else {
            right = mid;
        }
    }
    mid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio_f64;
    use crate::BigCount;

    const GOLDEN: f64 = 1.618033988749895;

    #[test]
    fn initial_terms_are_powers_of_two() {
        assert_eq!(
            (1..=4).map(|t| fib_q::<u64>(4, t)).collect::<Vec<_>>(),
            vec![1, 2, 4, 8]
        );
        for q in 1..=32u32 {
            for t in 1..=q as i64 {
                assert_eq!(
                    fib_q::<BigCount>(q, t),
                    BigCount::from(1u8) << (t - 1) as u32
                );
            }
        }
    }

    #[test]
    fn fibonacci_and_tribonacci_terms() {
        assert_eq!(
            (0..=5).map(|t| fib_q::<u64>(2, t)).collect::<Vec<_>>(),
            vec![1, 1, 2, 3, 5, 8]
        );
        assert_eq!(fib_q::<u64>(3, 4), 7);
        assert_eq!(fib_q::<u64>(2, -1), 0);
        assert_eq!(fib_q::<u64>(5, -100), 0);
    }

    #[test]
    fn prefix_sums() {
        assert_eq!(prefix_sum_fib_q::<u64>(2, 2), 4);
        assert_eq!(prefix_sum_fib_q::<u64>(4, 4), 16);
        assert_eq!(prefix_sum_fib_q::<u64>(3, 0), 1);
    }

    #[test]
    fn prefix_sum_matches_shifted_fibonacci() {
        for t in 0..=1000u64 {
            let lhs = prefix_sum_fib_q::<BigCount>(2, t);
            let rhs = fib_q::<BigCount>(2, t as i64 + 2) - BigCount::from(1u8);
            assert_eq!(lhs, rhs, "t = {t}");
        }
    }

    #[test]
    fn growth_root_golden_ratio() {
        let r = growth_root::<f64>(2, 1e-12);
        assert!((r.value - GOLDEN).abs() < 1e-9);
        assert!(r.residual <= 1e-12);
        assert!((2.0 - r.value.powi(-2) - r.value).abs() <= 1e-12);
    }

    #[test]
    fn growth_root_tribonacci_constant() {
        let r = growth_root::<f64>(3, 1e-12);
        assert!((r.value - 1.8392867552141612).abs() < 1e-9);
        assert!((r.value - 1.84).abs() < 0.005);
    }

    #[test]
    fn growth_root_stays_in_bracket() {
        for q in 1..=64u32 {
            let r = growth_root::<f64>(q, 1e-12);
            let left = 2.0 * (1.0 - 2f64.powi(-(q as i32)));
            assert!(r.value >= left && r.value <= 2.0, "q = {q}");
        }
    }

    #[test]
    fn growth_root_q1_is_one() {
        let r = growth_root::<f64>(1, 1e-9);
        assert_eq!(r.value, 1.0);
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn cfrac_first_iterate() {
        let r = growth_root_cfrac::<f64>(2, 1);
        assert_eq!(r.value, 1.75);
    }

    #[test]
    fn cfrac_agrees_with_bisection() {
        let bisect = growth_root::<f64>(2, 1e-12);
        let cf = growth_root_cfrac::<f64>(2, 60);
        assert!((bisect.value - cf.value).abs() < 1e-9);

        let bisect8 = growth_root::<f64>(8, 1e-14);
        let cf8 = growth_root_cfrac::<f64>(8, 200);
        assert!((bisect8.value - cf8.value).abs() < 1e-12);
    }

    #[test]
    fn cfrac_until_stops_early() {
        let r = growth_root_cfrac_until::<f64>(4, 1e-10, 10_000);
        assert!(r.residual <= 1e-10);
        assert!(r.iterations < 100);
    }

    #[test]
    fn reciprocal_root_examples() {
        assert_eq!(reciprocal_root::<f64>(1, 1e-9), 1.0);
        assert!((reciprocal_root::<f64>(2, 1e-12) - 1.0 / GOLDEN).abs() < 1e-9);
        let z3 = reciprocal_root::<f64>(3, 1e-12);
        assert!((z3 - 0.5436890126920763).abs() < 1e-9);
        let poly = z3 * z3 * z3 + z3 * z3 + z3 - 1.0;
        assert!(poly.abs() < 1e-9);
    }

    #[test]
    fn reciprocal_times_growth_is_one() {
        for q in 2..=32u32 {
            let phi = growth_root::<f64>(q, 1e-9).value;
            let z = reciprocal_root::<f64>(q, 1e-9);
            assert!((phi * z - 1.0).abs() <= 2e-9, "q = {q}");
        }
    }

    #[test]
    fn factored_polynomial_identity() {
        // (z - 1)(z^q + ... + z - 1) = z^(q+1) - 2z + 1 on sampled points.
        for q in 1..=16u32 {
            for i in 0..200 {
                let z = -1.0 + 2.5 * (i as f64) / 199.0;
                let mut sum = 0.0;
                let mut pow = 1.0;
                for _ in 1..=q {
                    pow *= z;
                    sum += pow;
                }
                let lhs = (z - 1.0) * (sum - 1.0);
                let rhs = pow * z - 2.0 * z + 1.0;
                assert!(
                    (lhs - rhs).abs() < 1e-9 * (1.0 + rhs.abs()),
                    "q = {q}, z = {z}"
                );
            }
        }
    }

    #[test]
    fn term_ratio_approaches_growth_root() {
        for q in [2u32, 3, 4, 8] {
            let num = fib_q::<BigCount>(q, 200);
            let den = fib_q::<BigCount>(q, 199);
            let ratio = ratio_f64(&num, &den);
            let phi = growth_root::<f64>(q, 1e-12).value;
            assert!((ratio - phi).abs() < 1e-9, "q = {q}");
        }
    }

    #[test]
    fn works_in_f32_too() {
        let r = growth_root::<f32>(2, 1e-6);
        assert!((r.value - GOLDEN as f32).abs() < 1e-5);
    }
}
