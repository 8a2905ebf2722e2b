//! Circumradius of a cyclic quadrilateral from its four sides:
//!
//! ```text
//! R^2 = (ab+cd)(ac+bd)(ad+bc) / ((b+c+d-a)(a+c+d-b)(a+b+d-c)(a+b+c-d))
//! ```

use crate::bigfixed::{BigNat, FixedDec};
use crate::error::{Error, Result};
use crate::pi_series::GUARD_DIGITS;
use crate::reference::pi_at;
use crate::trig::{sin_series, terms_for_accuracy, Angle};

/// Four sides in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSides {
    sides: [FixedDec; 4],
}

impl QuadSides {
    /// Checks positivity and that every side is shorter than the other three
    /// together.
    pub fn new(a: FixedDec, b: FixedDec, c: FixedDec, d: FixedDec) -> Result<Self> {
        let sides = [a, b, c, d];
        if sides.iter().any(|s| s.is_zero() || s.is_negative()) {
            return Err(Error::NonPositiveSide);
        }
        let q = QuadSides { sides };
        for (index, bracket) in q.brackets().iter().enumerate() {
            if bracket.is_zero() || bracket.is_negative() {
                return Err(Error::DegenerateQuadrilateral {
                    index,
                    value: bracket.to_string(),
                });
            }
        }
        Ok(q)
    }

    pub fn sides(&self) -> &[FixedDec; 4] {
        &self.sides
    }

    fn common_scale(&self) -> [FixedDec; 4] {
        let s = self.sides.iter().map(FixedDec::scale).max().unwrap();
        self.sides.clone().map(|x| x.rescale(s))
    }

    /// `(b+c+d-a), (a+c+d-b), (a+b+d-c), (a+b+c-d)`, exact.
    fn brackets(&self) -> [FixedDec; 4] {
        let s = self.common_scale();
        let total = &(&(&s[0] + &s[1]) + &s[2]) + &s[3];
        [0, 1, 2, 3].map(|i| &total - &s[i].mul_small(2))
    }

    /// `(ab+cd), (ac+bd), (ad+bc)`, exact.
    fn pair_sums(&self) -> [FixedDec; 3] {
        let [a, b, c, d] = self.common_scale();
        [
            &a.mul_exact(&b) + &c.mul_exact(&d),
            &a.mul_exact(&c) + &b.mul_exact(&d),
            &a.mul_exact(&d) + &b.mul_exact(&c),
        ]
    }

    /// Sides scaled by `num / den`, truncated at `scale`.
    pub fn scaled(&self, num: u64, den: u64, scale: u32) -> Result<QuadSides> {
        let [a, b, c, d] = self.sides.clone().map(|s| {
            s.rescale(scale)
                .mul_small(num as u32)
                .div_nat(&BigNat::from_u64(den))
                .expect("nonzero")
        });
        QuadSides::new(a, b, c, d)
    }
}

/// `R` truncated at `scale`: the radicand is formed exactly, divided once at
/// `2 * scale` and passed through the floor square root, which makes the
/// result the exact floor of the true radius.
pub fn circumradius(q: &QuadSides, scale: u32) -> Result<FixedDec> {
    let ulp = FixedDec::ulp(scale);
    for (index, bracket) in q.brackets().iter().enumerate() {
        if bracket.cmp_value(&ulp).is_le() {
            return Err(Error::DegenerateQuadrilateral {
                index,
                value: bracket.to_string(),
            });
        }
    }
    let [p, r, s] = q.pair_sums();
    let numerator = p.mul_exact(&r).mul_exact(&s);
    let [b0, b1, b2, b3] = q.brackets();
    let denominator = b0.mul_exact(&b1).mul_exact(&b2).mul_exact(&b3);
    let squared = numerator.div(&denominator, 2 * scale)?;
    squared.isqrt(scale)
}

/// Sides of the quadrilateral inscribed in a circle of radius `radius` with
/// vertices at the given angles: side k is `2R sin(gap_k / 2)`, the last gap
/// closing the circle. Sides are truncated at `scale`.
pub fn circumradius_oracle(
    angles: &[FixedDec; 4],
    radius: &FixedDec,
    scale: u32,
) -> Result<QuadSides> {
    let w = scale + GUARD_DIGITS;
    let two_pi = pi_at(w).mul_small(2);
    let a: Vec<FixedDec> = angles.iter().map(|x| x.rescale(w)).collect();
    if a[0].is_negative() || a[3].cmp_value(&two_pi).is_ge() {
        return Err(Error::BadAngles);
    }
    if a.windows(2).any(|p| p[1].cmp_value(&p[0]).is_le()) {
        return Err(Error::BadAngles);
    }
    let gaps = [
        &a[1] - &a[0],
        &a[2] - &a[1],
        &a[3] - &a[2],
        &two_pi - &(&a[3] - &a[0]),
    ];
    let diameter = radius.rescale(w).mul_small(2);
    let mut sides = Vec::with_capacity(4);
    for gap in gaps {
        let half = Angle::from_radians(gap.div_nat(&BigNat::from_u64(2))?);
        let terms = terms_for_accuracy(&half, w);
        let sine = sin_series(&half, terms, w)?;
        sides.push(diameter.mul(&sine).rescale(scale));
    }
    let [a, b, c, d]: [FixedDec; 4] = sides.try_into().expect("four sides");
    QuadSides::new(a, b, c, d)
}
