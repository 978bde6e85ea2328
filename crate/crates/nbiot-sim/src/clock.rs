//! Simulation time base in NB-IoT frame-structure units.
//!
//! Time advances in 1 ms subframes. A [`SubframeClock`] is the on-air
//! representation (hyperframe, frame, subframe); [`AbsSf`] is a flat
//! subframe count since simulation start used for scheduling arithmetic.

/// Subframes per radio frame.
pub const SF_PER_FRAME: u64 = 10;
/// Frames per hyperframe cycle.
pub const FRAMES_PER_HYPER: u64 = 1024;
/// Hyperframes before the full clock wraps.
pub const HYPER_CYCLE: u64 = 1024;
/// Subframes in one hyperframe (10.24 s).
pub const SF_PER_HYPER: u64 = SF_PER_FRAME * FRAMES_PER_HYPER;
/// Subframes in the full (hfn, sfn, sf) cycle.
pub const SF_PER_FULL_CYCLE: u64 = SF_PER_HYPER * HYPER_CYCLE;

/// Absolute subframe count since simulation start. One unit is 1 ms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AbsSf(pub u64);

impl AbsSf {
    pub fn value(self) -> u64 {
        self.0
    }

    /// Frame number within the current hyperframe, as carried on the air
    /// interface (and in FAPI subframe indications).
    pub fn sfn(self) -> u16 {
        ((self.0 % SF_PER_HYPER) / SF_PER_FRAME) as u16
    }

    /// Subframe number within the current frame.
    pub fn sf(self) -> u8 {
        (self.0 % SF_PER_FRAME) as u8
    }
}

impl std::ops::Add<u64> for AbsSf {
    type Output = AbsSf;
    fn add(self, rhs: u64) -> AbsSf {
        AbsSf(self.0 + rhs)
    }
}

impl std::ops::Sub<AbsSf> for AbsSf {
    type Output = u64;
    fn sub(self, rhs: AbsSf) -> u64 {
        self.0 - rhs.0
    }
}

impl std::fmt::Display for AbsSf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Simulation time as (hyperframe, system frame, subframe).
///
/// Ordering is lexicographic, which matches chronological order within one
/// full cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubframeClock {
    /// Hyperframe number, 0..=1023.
    pub hfn: u16,
    /// System frame number, 0..=1023.
    pub sfn: u16,
    /// Subframe number, 0..=9.
    pub sf: u8,
}

impl SubframeClock {
    pub fn new(hfn: u16, sfn: u16, sf: u8) -> Self {
        debug_assert!(hfn < HYPER_CYCLE as u16 && sfn < FRAMES_PER_HYPER as u16 && sf < 10);
        Self { hfn, sfn, sf }
    }

    /// Next subframe, carrying sf -> sfn -> hfn and wrapping the full cycle.
    pub fn advance(self) -> SubframeClock {
        let mut sf = self.sf + 1;
        let mut sfn = self.sfn;
        let mut hfn = self.hfn;
        if sf == 10 {
            sf = 0;
            sfn += 1;
            if sfn == FRAMES_PER_HYPER as u16 {
                sfn = 0;
                hfn += 1;
                if hfn == HYPER_CYCLE as u16 {
                    hfn = 0;
                }
            }
        }
        SubframeClock { hfn, sfn, sf }
    }

    /// Position within the full cycle as a flat subframe count.
    pub fn to_abs(self) -> AbsSf {
        AbsSf((self.hfn as u64 * FRAMES_PER_HYPER + self.sfn as u64) * SF_PER_FRAME + self.sf as u64)
    }

    /// Inverse of [`to_abs`], reducing the count modulo the full cycle.
    ///
    /// [`to_abs`]: SubframeClock::to_abs
    pub fn from_abs(abs: AbsSf) -> SubframeClock {
        let x = abs.0 % SF_PER_FULL_CYCLE;
        SubframeClock {
            hfn: (x / SF_PER_HYPER) as u16,
            sfn: ((x % SF_PER_HYPER) / SF_PER_FRAME) as u16,
            sf: (x % SF_PER_FRAME) as u8,
        }
    }
}

impl std::fmt::Display for SubframeClock {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}.{}.{}", self.hfn, self.sfn, self.sf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn advance_carries() {
        assert_eq!(SubframeClock::new(0, 0, 9).advance(), SubframeClock::new(0, 1, 0));
        assert_eq!(SubframeClock::new(0, 1023, 9).advance(), SubframeClock::new(1, 0, 0));
        assert_eq!(SubframeClock::new(1023, 1023, 9).advance(), SubframeClock::new(0, 0, 0));
    }

    #[test]
    fn abs_examples() {
        assert_eq!(SubframeClock::new(0, 0, 0).to_abs(), AbsSf(0));
        assert_eq!(SubframeClock::new(0, 1, 0).to_abs(), AbsSf(10));
        assert_eq!(SubframeClock::new(0, 0, 2).to_abs(), AbsSf(2));
    }

    #[test]
    fn hyperframe_increment_after_10240_advances() {
        let mut c = SubframeClock::new(0, 0, 0);
        for _ in 0..SF_PER_HYPER {
            c = c.advance();
        }
        assert_eq!(c, SubframeClock::new(1, 0, 0));
    }

    #[test]
    fn to_abs_strictly_increasing_along_advance() {
        let mut c = SubframeClock::new(7, 1000, 3);
        let mut prev = c.to_abs();
        for _ in 0..50_000 {
            c = c.advance();
            let cur = c.to_abs();
            if c == SubframeClock::new(0, 0, 0) {
                break; // full-cycle wrap is the one allowed reset
            }
            assert!(cur > prev, "to_abs regressed: {prev:?} -> {cur:?}");
            prev = cur;
        }
    }

    #[test]
    fn abs_round_trip_mod_full_cycle() {
        for &x in &[0u64, 1, 9, 10, 10_239, 10_240, 123_456, SF_PER_FULL_CYCLE - 1] {
            assert_eq!(SubframeClock::from_abs(AbsSf(x)).to_abs(), AbsSf(x % SF_PER_FULL_CYCLE));
        }
        assert_eq!(
            SubframeClock::from_abs(AbsSf(SF_PER_FULL_CYCLE + 17)).to_abs(),
            AbsSf(17)
        );
    }
}
