//! Reference value of pi for comparisons and degree conversion.

use std::sync::OnceLock;

use crate::bigfixed::FixedDec;
use crate::pi_series::{pi_sqrt12, terms_for_digits, SeriesId};

/// Pi to 30 decimals, truncated.
pub const PI_30: &str = "3.141592653589793238462643383279";
pub const PI_30_SCALE: u32 = 30;

/// sqrt(12)-series terms used to confirm [`PI_30`]; the bound is below 1e-35.
const VALIDATION_TERMS: u64 = 70;

/// [`PI_30`] parsed, after checking it against the sqrt(12) series.
///
/// Panics if the literal disagrees with the series at 30 decimals.
pub fn pi_reference() -> &'static FixedDec {
    static PI: OnceLock<FixedDec> = OnceLock::new();
    PI.get_or_init(|| {
        let literal: FixedDec = PI_30.parse().expect("well-formed literal");
        let series = pi_sqrt12(VALIDATION_TERMS, PI_30_SCALE + 5)
            .expect("positive term count")
            .rescale(PI_30_SCALE);
        assert_eq!(series, literal, "reference pi failed validation");
        literal
    })
}

/// Pi truncated to `scale` digits.
///
/// Up to 30 digits this is exact; beyond that it comes from the sqrt(12)
/// series and may sit one unit below the true truncation.
pub fn pi_at(scale: u32) -> FixedDec {
    if scale <= PI_30_SCALE {
        return pi_reference().rescale(scale);
    }
    let terms = terms_for_digits(SeriesId::Sqrt12, scale + 2).expect("sqrt12 always feasible");
    pi_sqrt12(terms, scale).expect("positive term count")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_validates() {
        assert_eq!(pi_reference().to_string(), PI_30);
    }

    #[test]
    fn wide_pi_extends_literal() {
        let wide = pi_at(45);
        assert!(wide.to_string().starts_with(PI_30));
        // 3.14159265358979323846264338327950288419716939937510...
        let known: FixedDec = "3.141592653589793238462643383279502884197169399"
            .parse()
            .unwrap();
        assert!(wide.abs_diff(&known).cmp_value(&FixedDec::ulp(44)).is_le());
        assert_eq!(pi_at(4).to_string(), "3.1415");
    }
}
