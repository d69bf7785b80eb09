use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

pub fn is_squarefree(d: u64) -> bool {
    let mut k = 2u64;
    while k * k <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Smallest `(x, y)` with `y >= 1` and `x^2 - d y^2 = ±1`, from the
/// continued fraction of `√d`. The unit `x + y√d` generates the units of
/// `Z[√d]` up to sign.
pub fn pell_fundamental_unit(d: u64) -> Result<(BigInt, BigInt)> {
    if d < 2 || !is_squarefree(d) {
        return Err(Error::InvalidInput(format!(
            "Pell parameter must be squarefree and at least 2, got {d}"
        )));
    }
    let a0 = d.sqrt();
    let (mut m, mut q, mut a) = (0u64, 1u64, a0);
    // Convergents p/k: p_{-1} = 1, p_0 = a0; k_{-1} = 0, k_0 = 1.
    let (mut p_prev, mut p) = (BigInt::one(), BigInt::from(a0));
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    let dd = BigInt::from(d);
    loop {
        let norm = &p * &p - &dd * &k * &k;
        if norm == BigInt::one() || norm == -BigInt::one() {
            return Ok((p, k));
        }
        m = a * q - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        let ab = BigInt::from(a);
        let p_next = &ab * &p + &p_prev;
        let k_next = &ab * &k + &k_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
}
