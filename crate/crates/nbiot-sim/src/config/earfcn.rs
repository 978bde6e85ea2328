//! EARFCN to carrier-frequency mapping for the supported E-UTRA bands.

/// Which EARFCN mapping to apply.
///
/// The deployed band-28 cell this simulator reproduces advertises EARFCN 9448
/// as a 780 MHz carrier, which the standard channel-raster formula does not
/// give (it yields 781.8 MHz). The field mapping is the default so bundled
/// configurations and UE scripts line up; the formula mapping is available
/// for standard-conformant setups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EarfcnMapping {
    /// Per-band table with field-observed overrides (default).
    #[default]
    FieldTable,
    /// Standard 100 kHz raster formula: dl = f_dl_low + 100 kHz * (earfcn - offset).
    StandardFormula,
}

/// Downlink/uplink carrier pair in Hz.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Carrier {
    pub dl_hz: u64,
    pub ul_hz: u64,
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum EarfcnError {
    #[error("unknown E-UTRA band {0}")]
    UnknownBand(i64),
    #[error("EARFCN {earfcn} outside band {band} range {low}..={high}")]
    OutOfRange { band: u16, earfcn: i64, low: u32, high: u32 },
}

struct BandEntry {
    band: u16,
    f_dl_low_hz: u64,
    earfcn_low: u32,
    earfcn_high: u32,
    /// ul = dl + duplex offset
    duplex_offset_hz: i64,
    /// (earfcn, dl_hz) pairs observed on deployed cells that deviate from
    /// the raster formula.
    overrides: &'static [(u32, u64)],
}

const BANDS: &[BandEntry] = &[
    BandEntry { band: 1, f_dl_low_hz: 2_110_000_000, earfcn_low: 0, earfcn_high: 599, duplex_offset_hz: -190_000_000, overrides: &[] },
    BandEntry { band: 3, f_dl_low_hz: 1_805_000_000, earfcn_low: 1200, earfcn_high: 1949, duplex_offset_hz: -95_000_000, overrides: &[] },
    BandEntry { band: 5, f_dl_low_hz: 869_000_000, earfcn_low: 2400, earfcn_high: 2649, duplex_offset_hz: -45_000_000, overrides: &[] },
    BandEntry { band: 8, f_dl_low_hz: 925_000_000, earfcn_low: 3450, earfcn_high: 3799, duplex_offset_hz: -45_000_000, overrides: &[] },
    BandEntry { band: 20, f_dl_low_hz: 791_000_000, earfcn_low: 6150, earfcn_high: 6449, duplex_offset_hz: 41_000_000, overrides: &[] },
    BandEntry {
        band: 28,
        f_dl_low_hz: 758_000_000,
        earfcn_low: 9210,
        earfcn_high: 9659,
        duplex_offset_hz: -55_000_000,
        overrides: &[(9448, 780_000_000)],
    },
];

fn band_entry(band: i64) -> Result<&'static BandEntry, EarfcnError> {
    BANDS
        .iter()
        .find(|b| b.band as i64 == band)
        .ok_or(EarfcnError::UnknownBand(band))
}

/// Map (band, EARFCN) to a downlink/uplink carrier pair. The uplink is the
/// downlink shifted by the band's duplex offset.
pub fn earfcn_to_carrier(band: i64, earfcn: i64, mapping: EarfcnMapping) -> Result<Carrier, EarfcnError> {
    let entry = band_entry(band)?;
    if earfcn < entry.earfcn_low as i64 || earfcn > entry.earfcn_high as i64 {
        return Err(EarfcnError::OutOfRange {
            band: entry.band,
            earfcn,
            low: entry.earfcn_low,
            high: entry.earfcn_high,
        });
    }
    let dl_hz = match mapping {
        EarfcnMapping::FieldTable => entry
            .overrides
            .iter()
            .find(|(e, _)| *e as i64 == earfcn)
            .map(|(_, f)| *f)
            .unwrap_or_else(|| formula_dl(entry, earfcn)),
        EarfcnMapping::StandardFormula => formula_dl(entry, earfcn),
    };
    let ul_hz = (dl_hz as i64 + entry.duplex_offset_hz) as u64;
    Ok(Carrier { dl_hz, ul_hz })
}

fn formula_dl(entry: &BandEntry, earfcn: i64) -> u64 {
    entry.f_dl_low_hz + 100_000 * (earfcn - entry.earfcn_low as i64) as u64
}

/// Inverse mapping: the EARFCN a cell with this downlink frequency
/// advertises, or `None` when the frequency is off-raster for the band.
pub fn carrier_to_earfcn(band: i64, dl_hz: u64, mapping: EarfcnMapping) -> Option<u32> {
    let entry = band_entry(band).ok()?;
    if mapping == EarfcnMapping::FieldTable {
        if let Some((e, _)) = entry.overrides.iter().find(|(_, f)| *f == dl_hz) {
            return Some(*e);
        }
    }
    if dl_hz < entry.f_dl_low_hz {
        return None;
    }
    let delta = dl_hz - entry.f_dl_low_hz;
    if delta % 100_000 != 0 {
        return None;
    }
    let earfcn = entry.earfcn_low as u64 + delta / 100_000;
    if earfcn > entry.earfcn_high as u64 {
        return None;
    }
    Some(earfcn as u32)
}

/// Default duplex offset (ul - dl) for a band.
pub fn duplex_offset_hz(band: i64) -> Result<i64, EarfcnError> {
    Ok(band_entry(band)?.duplex_offset_hz)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn band28_field_entry() {
        let c = earfcn_to_carrier(28, 9448, EarfcnMapping::FieldTable).unwrap();
        assert_eq!(c.dl_hz, 780_000_000);
        assert_eq!(c.ul_hz, 725_000_000); // 780 MHz + (-55 MHz)
    }

    #[test]
    fn band28_formula_differs() {
        let c = earfcn_to_carrier(28, 9448, EarfcnMapping::StandardFormula).unwrap();
        assert_eq!(c.dl_hz, 758_000_000 + 100_000 * (9448 - 9210)); // 781.8 MHz
        assert_eq!(c.dl_hz, 781_800_000);
    }

    #[test]
    fn unknown_band_rejected() {
        assert_eq!(
            earfcn_to_carrier(999, 9448, EarfcnMapping::FieldTable),
            Err(EarfcnError::UnknownBand(999))
        );
    }

    #[test]
    fn out_of_range_earfcn_rejected() {
        assert!(matches!(
            earfcn_to_carrier(28, 9700, EarfcnMapping::FieldTable),
            Err(EarfcnError::OutOfRange { .. })
        ));
    }

    #[test]
    fn reverse_lookup_prefers_field_entry() {
        assert_eq!(carrier_to_earfcn(28, 780_000_000, EarfcnMapping::FieldTable), Some(9448));
        // 780 MHz is on the raster too, but the formula maps it elsewhere.
        assert_eq!(carrier_to_earfcn(28, 780_000_000, EarfcnMapping::StandardFormula), Some(9430));
        assert_eq!(carrier_to_earfcn(28, 780_000_001, EarfcnMapping::StandardFormula), None);
    }

    #[test]
    fn forward_reverse_consistent_on_formula() {
        for earfcn in [9210_i64, 9300, 9448, 9659] {
            let c = earfcn_to_carrier(28, earfcn, EarfcnMapping::StandardFormula).unwrap();
            assert_eq!(carrier_to_earfcn(28, c.dl_hz, EarfcnMapping::StandardFormula), Some(earfcn as u32));
        }
    }
}
