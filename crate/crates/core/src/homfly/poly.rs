use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Integer Laurent polynomial in the framing variable `a` and in `z`,
/// stored sparsely as `(a-exponent, z-exponent) -> coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomflyPoly {
    terms: BTreeMap<(i32, i32), i64>,
}

impl HomflyPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, a: i32, z: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert((a, z), coeff);
        }
        Self { terms }
    }

    /// Value of a split unknot component: `(a − a⁻¹) z⁻¹`.
    pub fn delta() -> Self {
        Self::monomial(1, 1, -1) + Self::monomial(-1, -1, -1)
    }

    /// `δ^(c−1)`, the polynomial of the `c`-component unlink.
    pub fn unlink(components: usize) -> Self {
        assert!(components > 0, "the empty link has no HOMFLY polynomial");
        Self::delta().pow(components - 1)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i32, z: i32) -> i64 {
        self.terms.get(&(a, z)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    fn add_term(&mut self, key: (i32, i32), c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    /// Multiply by `c·a^da·z^dz`.
    pub fn shifted(&self, c: i64, da: i32, dz: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(&(a, z), &k)| ((a + da, z + dz), k * c)).collect();
        Self { terms }
    }

    pub fn max_a_degree(&self) -> Option<i32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn min_a_degree(&self) -> Option<i32> {
        self.terms.keys().map(|&(a, _)| a).min()
    }

    /// Polynomial of the mirror image: `a ↦ a⁻¹`, `z ↦ −z`.
    pub fn mirror(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, z), &c) in &self.terms {
            out.add_term((-a, z), if z.rem_euclid(2) == 1 { -c } else { c });
        }
        out
    }

    /// Conway polynomial coefficients obtained by setting `a = 1`, indexed
    /// by `z`-exponent.
    pub fn at_a_one(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (&(_, z), &c) in &self.terms {
            *out.entry(z).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

impl fmt::Display for HomflyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(&(a, z), &c)| format!("{c}*a^{a}*z^{z}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl AddAssign<&HomflyPoly> for HomflyPoly {
    fn add_assign(&mut self, rhs: &HomflyPoly) {
        for (&k, &c) in &rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl Add for HomflyPoly {
    type Output = HomflyPoly;
    fn add(mut self, rhs: HomflyPoly) -> HomflyPoly {
        self += &rhs;
        self
    }
}

impl Sub for HomflyPoly {
    type Output = HomflyPoly;
    fn sub(mut self, rhs: HomflyPoly) -> HomflyPoly {
        self += &(-rhs);
        self
    }
}

impl Neg for HomflyPoly {
    type Output = HomflyPoly;
    fn neg(mut self) -> HomflyPoly {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}

impl Mul for &HomflyPoly {
    type Output = HomflyPoly;
    fn mul(self, rhs: &HomflyPoly) -> HomflyPoly {
        let mut out = HomflyPoly::zero();
        for (&(a1, z1), &c1) in &self.terms {
            for (&(a2, z2), &c2) in &rhs.terms {
                out.add_term((a1 + a2, z1 + z2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for HomflyPoly {
    type Output = HomflyPoly;
    fn mul(self, rhs: HomflyPoly) -> HomflyPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let d = HomflyPoly::delta();
        assert_eq!(d.to_string(), "1*a^1*z^-1 + -1*a^-1*z^-1");
        assert!((d.clone() - d.clone()).is_zero());
        assert_eq!(HomflyPoly::unlink(1), HomflyPoly::one());
        let d2 = d.pow(2);
        assert_eq!(d2.coeff(0, -2), -2);
        assert_eq!(d2.coeff(2, -2), 1);
        assert_eq!(HomflyPoly::zero().to_string(), "0");
    }

    #[test]
    fn mirror_is_an_involution() {
        let p = HomflyPoly::monomial(-1, -4, 0) + HomflyPoly::monomial(1, -2, 2) + HomflyPoly::monomial(3, 1, 1);
        assert_eq!(p.mirror().mirror(), p);
        assert_eq!(p.mirror().coeff(-1, 1), -3);
    }
}
