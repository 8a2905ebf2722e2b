//! Kali-day arithmetic and Julian-calendar dates.
//!
//! Dates are proleptic Julian with astronomical year numbering (1 BCE is
//! year 0). Conversions use integer arithmetic only.

use std::fmt;

use serde::Serialize;

use crate::bigfixed::{BigNat, FixedDec};
use crate::error::{Error, Result};

/// Julian Day of the Kali epoch, midnight 17/18 February 3102 BCE (Julian).
pub const KALI_EPOCH_JD: &str = "588465.5";

/// Mean anomalistic month in days (perigee to perigee), fixed at 6 decimals.
pub const ANOMALISTIC_MONTH_DAYS: &str = "27.554550";

/// Kali day count subtracted first in the lunar computation.
pub const VENVAROHA_KALI_DAYS: u64 = 1_502_008;

/// Whole anomalistic cycles subtracted after that.
pub const VENVAROHA_CYCLES: u64 = 5180;

/// The date the epoch is reported to fall on.
pub const VENVAROHA_EXPECTED: CalendarDate = CalendarDate {
    year: 1402,
    month: 3,
    day: 10,
};

/// Days either side of [`VENVAROHA_EXPECTED`] accepted as a match; covers
/// midnight versus sunrise epochs and the meridian of reckoning.
pub const VENVAROHA_TOLERANCE_DAYS: i64 = 2;

/// Days elapsed since the Kali epoch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KaliInstant {
    kali_day: FixedDec,
}

impl KaliInstant {
    pub fn new(kali_day: FixedDec) -> Result<Self> {
        if kali_day.is_negative() {
            return Err(Error::OutOfDomain {
                what: "KaliInstant",
                value: kali_day.to_string(),
                bound: "kali_day >= 0",
            });
        }
        Ok(KaliInstant { kali_day })
    }

    pub fn kali_day(&self) -> &FixedDec {
        &self.kali_day
    }
}

/// A Julian-calendar date.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CalendarDate {
    pub year: i64,
    pub month: u8,
    pub day: u8,
}

fn is_leap(year: i64) -> bool {
    year.rem_euclid(4) == 0
}

fn month_length(year: i64, month: u8) -> u8 {
    match month {
        4 | 6 | 9 | 11 => 30,
        2 if is_leap(year) => 29,
        2 => 28,
        _ => 31,
    }
}

impl CalendarDate {
    pub fn new(year: i64, month: u8, day: u8) -> Result<Self> {
        if !(1..=12).contains(&month) || day == 0 || day > month_length(year, month) {
            return Err(Error::InvalidDate { year, month, day });
        }
        Ok(CalendarDate { year, month, day })
    }

    /// Julian Day Number of noon on this date.
    pub fn day_number(&self) -> i64 {
        let (y, m) = if self.month <= 2 {
            (self.year - 1, self.month as i64 + 12)
        } else {
            (self.year, self.month as i64)
        };
        (1461 * (y + 4716)).div_euclid(4) + (306_001 * (m + 1)) / 10_000 + self.day as i64 - 1524
    }

    /// Julian Date at the midnight that starts this day.
    pub fn to_jd(&self) -> FixedDec {
        let noon = FixedDec::from_int(self.day_number(), 1);
        &noon - &"0.5".parse::<FixedDec>().unwrap()
    }

    /// Civil date of the day with Julian Day Number `jdn`.
    pub fn from_day_number(jdn: i64) -> Self {
        let b = jdn + 1524;
        let c = (100 * b - 12_210).div_euclid(36_525);
        let d = (1461 * c).div_euclid(4);
        let e = ((b - d) * 10_000).div_euclid(306_001);
        let day = b - d - (306_001 * e).div_euclid(10_000);
        let month = if e < 14 { e - 1 } else { e - 13 };
        let year = if month > 2 { c - 4716 } else { c - 4715 };
        CalendarDate {
            year,
            month: month as u8,
            day: day as u8,
        }
    }
}

impl fmt::Display for CalendarDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.year < 0 {
            write!(f, "-{:04}-{:02}-{:02}", -self.year, self.month, self.day)
        } else {
            write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
        }
    }
}

pub fn kali_epoch_jd() -> FixedDec {
    KALI_EPOCH_JD.parse().expect("well-formed constant")
}

pub fn anomalistic_month() -> FixedDec {
    ANOMALISTIC_MONTH_DAYS
        .parse()
        .expect("well-formed constant")
}

/// `KALI_EPOCH_JD + kali_day`.
pub fn kali_to_julian_day(k: &KaliInstant) -> FixedDec {
    let epoch = kali_epoch_jd();
    let s = epoch.scale().max(k.kali_day.scale());
    &epoch.rescale(s) + &k.kali_day.rescale(s)
}

/// Julian-calendar date of the civil (midnight to midnight) day containing
/// the instant `jd`.
pub fn jd_to_date(jd: &FixedDec) -> Result<CalendarDate> {
    if jd.is_zero() || jd.is_negative() {
        return Err(Error::OutOfDomain {
            what: "jd_to_date",
            value: jd.to_string(),
            bound: "jd > 0",
        });
    }
    let half: FixedDec = "0.5".parse().unwrap();
    let s = jd.scale().max(1);
    let shifted = &jd.rescale(s) + &half.rescale(s);
    let (_, whole) = shifted.rescale(0).round_to_integer();
    let jdn = whole.to_u64().expect("day number fits u64") as i64;
    Ok(CalendarDate::from_day_number(jdn))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpochReport {
    pub kali_day: FixedDec,
    pub jd: FixedDec,
    pub date: CalendarDate,
    pub expected: CalendarDate,
    /// `date - expected` in days.
    pub offset_days: i64,
    pub within_tolerance: bool,
}

/// Date of kali day 1,502,008 followed by 5180 anomalistic months.
pub fn venvaroha_epoch_check() -> EpochReport {
    let cycles = anomalistic_month().mul_nat(&BigNat::from_u64(VENVAROHA_CYCLES));
    let start = FixedDec::from_int(VENVAROHA_KALI_DAYS as i64, cycles.scale());
    let kali_day = &start + &cycles;
    let instant = KaliInstant::new(kali_day.clone()).expect("positive");
    let jd = kali_to_julian_day(&instant);
    let date = jd_to_date(&jd).expect("positive jd");
    let offset_days = CalendarDate::day_number(&date) - VENVAROHA_EXPECTED.day_number();
    EpochReport {
        kali_day,
        jd,
        date,
        expected: VENVAROHA_EXPECTED,
        offset_days,
        within_tolerance: offset_days.abs() <= VENVAROHA_TOLERANCE_DAYS,
    }
}
