//! Calendar and interaction-trend features for interaction timestamps.
//!
//! Timestamps are handled at one-day resolution in UTC: every interaction on
//! the same day shares one feature vector. A full vector has 25 dimensions,
//! the 16 calendar ("statistical") dims followed by 9 trend ("structural")
//! dims derived from the daily interaction count series.

use chrono::{DateTime, Datelike, Utc};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const STAT_DIM: usize = 16;
pub const STRU_DIM: usize = 9;
pub const FEATURE_DIM: usize = STAT_DIM + STRU_DIM;

/// Window sizes (days) for the trend features, widest first.
pub const TREND_GAPS: [i64; 4] = [90, 30, 7, 1];

pub const SECONDS_PER_DAY: i64 = 86_400;

/// Seconds since the Unix epoch, UTC, non-negative.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct Timestamp(i64);

impl Timestamp {
    pub fn new(seconds: i64) -> Result<Self> {
        if seconds < 0 {
            return Err(Error::invalid(format!(
                "timestamp must be >= 0, got {seconds}"
            )));
        }
        Ok(Timestamp(seconds))
    }

    /// Midnight UTC of the given day index.
    pub fn from_day_index(day: i64) -> Result<Self> {
        Self::new(day.checked_mul(SECONDS_PER_DAY).ok_or_else(|| {
            Error::invalid(format!("day index {day} overflows the second range"))
        })?)
    }

    pub fn seconds(self) -> i64 {
        self.0
    }

    /// Days since the Unix epoch.
    pub fn day_index(self) -> i64 {
        self.0.div_euclid(SECONDS_PER_DAY)
    }

    fn datetime(self) -> DateTime<Utc> {
        // Always valid: 0 <= self.0 <= i64::MAX seconds is well inside chrono's range.
        DateTime::<Utc>::from_timestamp(self.0, 0).expect("timestamp in supported range")
    }

    pub fn year(self) -> i32 {
        self.datetime().year()
    }

    /// Month of the year, 1..=12.
    pub fn month(self) -> u32 {
        self.datetime().month()
    }

    /// ISO weekday, Monday = 1 .. Sunday = 7.
    pub fn weekday_from_monday(self) -> u32 {
        self.datetime().weekday().number_from_monday()
    }

    /// Meteorological season: Dec-Feb = 1 (winter), Mar-May = 2 (spring),
    /// Jun-Aug = 3 (summer), Sep-Nov = 4 (autumn).
    pub fn season(self) -> u32 {
        match self.month() {
            12 | 1 | 2 => 1,
            3..=5 => 2,
            6..=8 => 3,
            _ => 4,
        }
    }
}

/// Calendar origin of an interaction log, fixed once derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalendarContext {
    pub earliest_year: i32,
    /// Day index (days since epoch) of the earliest interaction.
    pub earliest_day: i64,
}

impl CalendarContext {
    pub fn from_timestamps(timestamps: &[Timestamp]) -> Result<Self> {
        let earliest = timestamps
            .iter()
            .min()
            .ok_or_else(|| Error::invalid("cannot derive a calendar context from an empty log"))?;
        Ok(CalendarContext {
            earliest_year: earliest.year(),
            earliest_day: earliest.day_index(),
        })
    }
}

/// Daily interaction counts over a contiguous day range.
///
/// `counts[i]` is the number of interactions on day `origin_day + i`. Days
/// outside the stored range count as zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DailyCountSeries {
    origin_day: i64,
    counts: Vec<f64>,
}

impl DailyCountSeries {
    pub fn new(origin_day: i64, counts: Vec<f64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::invalid("daily count series must not be empty"));
        }
        if counts.iter().any(|c| !c.is_finite() || *c < 0.0) {
            return Err(Error::invalid("daily counts must be finite and >= 0"));
        }
        Ok(DailyCountSeries { origin_day, counts })
    }

    /// Tally one count per timestamp over the full observed day range.
    pub fn from_timestamps(timestamps: &[Timestamp]) -> Result<Self> {
        let first = timestamps
            .iter()
            .map(|t| t.day_index())
            .min()
            .ok_or_else(|| Error::invalid("cannot build a count series from an empty log"))?;
        let last = timestamps.iter().map(|t| t.day_index()).max().unwrap();
        let mut counts = vec![0.0; (last - first + 1) as usize];
        for t in timestamps {
            counts[(t.day_index() - first) as usize] += 1.0;
        }
        DailyCountSeries::new(first, counts)
    }

    pub fn origin_day(&self) -> i64 {
        self.origin_day
    }

    pub fn last_day(&self) -> i64 {
        self.origin_day + self.counts.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Count on an absolute day index; zero outside the stored range.
    pub fn count(&self, day: i64) -> f64 {
        if day < self.origin_day || day > self.last_day() {
            0.0
        } else {
            self.counts[(day - self.origin_day) as usize]
        }
    }

    /// Sum over the half-open day window `(a, b]`.
    fn window_sum(&self, a: i64, b: i64) -> f64 {
        ((a + 1)..=b).map(|d| self.count(d)).sum()
    }

    /// First-order trend at an exact day, no padding applied: the difference
    /// between the counts in `(day-gap, day]` and `(day-2*gap, day-gap]`,
    /// divided by `gap`.
    fn trend1_raw(&self, day: i64, gap: i64) -> f64 {
        let current = self.window_sum(day - gap, day);
        let past = self.window_sum(day - 2 * gap, day - gap);
        (current - past) / gap as f64
    }

    /// Earliest day whose `(day-2*gap, day]` window lies fully in range.
    fn first_day_with_history(&self, gap: i64) -> i64 {
        (self.origin_day + 2 * gap - 1).min(self.last_day())
    }

    fn clamp_trend1_day(&self, day: i64, gap: i64) -> i64 {
        day.clamp(self.first_day_with_history(gap), self.last_day())
    }

    fn trend1(&self, day: i64, gap: i64) -> f64 {
        self.trend1_raw(self.clamp_trend1_day(day, gap), gap)
    }

    /// Earliest day whose second-order window only touches days that
    /// themselves have first-order history.
    fn first_day_with_history2(&self, gap: i64) -> i64 {
        (self.origin_day + 4 * gap - 2).min(self.last_day())
    }

    fn trend2(&self, day: i64, gap: i64) -> f64 {
        let day = day.clamp(self.first_day_with_history2(gap), self.last_day());
        let sum = |a: i64, b: i64| ((a + 1)..=b).map(|d| self.trend1(d, gap)).sum::<f64>();
        let current = sum(day - gap, day);
        let past = sum(day - 2 * gap, day - gap);
        (current - past) / gap as f64
    }
}

/// The 25-dim feature vector of one timestamp.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TemporalFeature {
    pub stat: [f64; STAT_DIM],
    pub stru: [f64; STRU_DIM],
    pub combined: [f64; FEATURE_DIM],
}

impl TemporalFeature {
    fn from_parts(stat: [f64; STAT_DIM], stru: [f64; STRU_DIM]) -> Self {
        let mut combined = [0.0; FEATURE_DIM];
        combined[..STAT_DIM].copy_from_slice(&stat);
        combined[STAT_DIM..].copy_from_slice(&stru);
        TemporalFeature {
            stat,
            stru,
            combined,
        }
    }
}

/// Calendar features: `[year_offset, day_offset, month, weekday one-hot (8),
/// season one-hot (5)]`.
///
/// Slot 0 of each one-hot block is reserved and never set; weekdays occupy
/// slots 1..=7 (Monday = 1) and seasons slots 1..=4 (winter = 1).
pub fn stat_features(t: Timestamp, ctx: &CalendarContext) -> Result<[f64; STAT_DIM]> {
    if t.day_index() < ctx.earliest_day {
        return Err(Error::precondition(format!(
            "timestamp day {} precedes the earliest interaction day {}",
            t.day_index(),
            ctx.earliest_day
        )));
    }
    let mut v = [0.0; STAT_DIM];
    v[0] = (t.year() - ctx.earliest_year) as f64;
    v[1] = (t.day_index() - ctx.earliest_day) as f64;
    v[2] = t.month() as f64;
    v[3 + t.weekday_from_monday() as usize] = 1.0;
    v[11 + t.season() as usize] = 1.0;
    Ok(v)
}

fn check_gap(gap: i64) -> Result<()> {
    if gap < 1 {
        return Err(Error::precondition(format!("gap must be >= 1, got {gap}")));
    }
    Ok(())
}

/// Windowed first difference of daily counts at day resolution.
///
/// Uses the half-open windows `(t-gap, t]` vs `(t-2*gap, t-gap]`. Days with
/// fewer than `2*gap` days of history (and days past the end of the series)
/// take the value of the nearest day with full history.
pub fn first_order_trend(series: &DailyCountSeries, t: Timestamp, gap: i64) -> Result<f64> {
    check_gap(gap)?;
    Ok(series.trend1(t.day_index(), gap))
}

/// Windowed first difference of `first_order_trend` values; same windows and
/// padding rule.
pub fn second_order_trend(series: &DailyCountSeries, t: Timestamp, gap: i64) -> Result<f64> {
    check_gap(gap)?;
    Ok(series.trend2(t.day_index(), gap))
}

/// Trend features: `[z, z'_90, z''_90, z'_30, z''_30, z'_7, z''_7, z'_1, z''_1]`
/// where `z` is the daily count and the primed values are first/second-order
/// trends over the gaps of [`TREND_GAPS`].
pub fn struct_features(series: &DailyCountSeries, t: Timestamp) -> Result<[f64; STRU_DIM]> {
    let day = t.day_index().clamp(series.origin_day(), series.last_day());
    let mut v = [0.0; STRU_DIM];
    v[0] = series.count(day);
    for (slot, &gap) in TREND_GAPS.iter().enumerate() {
        v[1 + 2 * slot] = first_order_trend(series, t, gap)?;
        v[2 + 2 * slot] = second_order_trend(series, t, gap)?;
    }
    Ok(v)
}

/// Full 25-dim feature: calendar features followed by trend features.
pub fn temporal_feature(
    t: Timestamp,
    ctx: &CalendarContext,
    series: &DailyCountSeries,
) -> Result<TemporalFeature> {
    let stat = stat_features(t, ctx)?;
    let stru = struct_features(series, t)?;
    Ok(TemporalFeature::from_parts(stat, stru))
}
