//! Quantum integers, factorials and binomials in base `q^d`.

use super::poly::Rat;
use super::qrat::QRat;
use num::One;

/// `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`.
pub fn q_integer(n: u32, d: u32) -> QRat {
    let (n, d) = (n as i64, d as i64);
    QRat::laurent((0..n).map(|k| (d * (n - 1 - 2 * k), Rat::one())))
}

pub fn q_factorial(n: u32, d: u32) -> QRat {
    (1..=n).map(|k| q_integer(k, d)).product()
}

/// Gaussian binomial `[m choose k]_{q^d}`; zero when `k > m`.
pub fn q_binomial(m: u32, k: u32, d: u32) -> QRat {
    if k > m {
        return QRat::zero();
    }
    q_factorial(m, d) / (q_factorial(k, d) * q_factorial(m - k, d))
}
