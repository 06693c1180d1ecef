use crate::complexity::{exact_cover, exact_packing, CoverResult};
use crate::error::{invalid, GraphonError, Result};
use crate::matrix::SymMatrix;

/// Largest instance the exact oracles accept.
pub const EXACT_THRESHOLD: usize = 16;

fn check(dist: &SymMatrix, threshold: usize) -> Result<()> {
    if dist.n() > threshold {
        return Err(GraphonError::TooLargeForExact {
            n: dist.n(),
            threshold,
        });
    }
    Ok(())
}

/// Minimum number of closed `eps`-balls centered at the points that cover
/// them all.
pub fn exact_covering_number(dist: &SymMatrix, eps: f64) -> Result<CoverResult> {
    check(dist, EXACT_THRESHOLD)?;
    if !(eps > 0.0) {
        return invalid(format!("eps = {eps} must be positive"));
    }
    Ok(exact_cover(dist, eps))
}

/// Largest subset with pairwise distances strictly greater than `eps`.
pub fn exact_packing_number(dist: &SymMatrix, eps: f64) -> Result<CoverResult> {
    check(dist, EXACT_THRESHOLD)?;
    if !(eps >= 0.0) {
        return invalid(format!("eps = {eps} must be non-negative"));
    }
    Ok(exact_packing(dist, eps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_enforced() {
        let d = SymMatrix::from_line_points(&vec![0.0; 17]);
        assert!(matches!(
            exact_covering_number(&d, 0.1),
            Err(GraphonError::TooLargeForExact { n: 17, threshold: 16 })
        ));
        assert!(exact_packing_number(&d, 0.1).is_err());
    }

    #[test]
    fn sandwich_on_line() {
        let d = SymMatrix::from_upper(4, 0.0, |i, j| (3 * j - 3 * i) as f64 / 10.0);
        let c = exact_covering_number(&d, 0.3).unwrap().size;
        let p = exact_packing_number(&d, 0.3).unwrap().size;
        let c_half = exact_covering_number(&d, 0.15).unwrap().size;
        assert_eq!((c, p, c_half), (2, 2, 4));
    }
}
