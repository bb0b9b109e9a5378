//! HOMFLY polynomials of oriented link diagrams and the resulting upper
//! bound on the Thurston–Bennequin number.

mod diagram;
mod poly;
mod skein;

pub use diagram::{DiagramError, GaussCode, PdCrossing, PlanarDiagram, StrandCrossing};
pub use poly::HomflyPoly;
pub use skein::{homfly, SkeinEngine};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomflyError {
    #[error("the zero polynomial has no framing degree")]
    ZeroPolynomial,
}

/// Largest exponent of the framing variable `a`.
pub fn max_framing_degree(p: &HomflyPoly) -> Result<i32, HomflyError> {
    p.max_a_degree().ok_or(HomflyError::ZeroPolynomial)
}

/// `tb ≤ −(max a-degree) − 1` for every Legendrian representative.
pub fn homfly_tb_bound(p: &HomflyPoly) -> Result<i64, HomflyError> {
    Ok(-(max_framing_degree(p)? as i64) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    #[test]
    fn framing_degree_and_bound() {
        assert_eq!(max_framing_degree(&HomflyPoly::one()), Ok(0));
        assert_eq!(homfly_tb_bound(&HomflyPoly::one()), Ok(-1));
        let t = homfly(&PlanarDiagram::from_braid(&BraidWord::new(2, vec![1, 1, 1]).unwrap()));
        assert_eq!(max_framing_degree(&t), Ok(-2));
        assert_eq!(homfly_tb_bound(&t), Ok(1));
        assert_eq!(max_framing_degree(&HomflyPoly::zero()), Err(HomflyError::ZeroPolynomial));
    }
}
