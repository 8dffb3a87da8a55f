//! Bracketing bisection.

use crate::error::{Error, Result};

/// Finds a sign change of `f` on `[lo, hi]` by bisection.
///
/// Stops after `max_iter` halvings or once the bracket is narrower than
/// `tol`, returning the midpoint. The endpoints must have opposite signs
/// (a zero at either endpoint is returned directly).
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64, max_iter: usize) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo.is_finite() && f_hi.is_finite()) || f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket(format!(
            "f({lo}) = {f_lo:e} and f({hi}) = {f_hi:e} do not bracket a root"
        )));
    }
    for _ in 0..max_iter {
        if (hi - lo).abs() <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14, 200).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn decreasing_function() {
        let r = bisect(|x| 1.0 - x, 0.0, 3.0, 1e-12, 200).unwrap();
        assert!((r - 1.0).abs() < 1e-11);
    }

    #[test]
    fn rejects_missing_bracket() {
        assert!(matches!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-9, 60), Err(Error::Bracket(_))));
    }
}
