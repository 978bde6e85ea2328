//! eNB configuration: file parsing, typed extraction and EARFCN mapping.

mod earfcn;
mod parse;

pub use earfcn::{carrier_to_earfcn, duplex_offset_hz, earfcn_to_carrier, Carrier, EarfcnError, EarfcnMapping};
pub use parse::{parse_config, ConfigTree, ConfigValue, ParseError};

/// NB-IoT carrier bandwidth in Hz; fixed by the radio technology.
pub const CARRIER_BANDWIDTH_HZ: u64 = 180_000;

/// Deployment mode of the NB-IoT carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OperationMode {
    #[default]
    Standalone,
    Inband,
    Guardband,
}

/// Uplink subcarrier spacing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SubcarrierSpacing {
    #[default]
    Khz15,
    Khz3_75,
}

impl SubcarrierSpacing {
    /// Duration of one uplink resource unit slot in whole subframes.
    /// 3.75 kHz slots are longer than 1 ms and round up.
    pub fn ul_base_subframes(self) -> u64 {
        match self {
            SubcarrierSpacing::Khz15 => 1,
            SubcarrierSpacing::Khz3_75 => 4,
        }
    }
}

/// Start of the Msg3 subcarrier range, as a fraction of the 48-subcarrier
/// uplink grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Msg3RangeStart {
    #[default]
    Zero,
    OneThird,
    TwoThird,
    One,
}

impl Msg3RangeStart {
    pub fn start_subcarrier(self) -> u8 {
        match self {
            Msg3RangeStart::Zero => 0,
            Msg3RangeStart::OneThird => 16,
            Msg3RangeStart::TwoThird => 32,
            Msg3RangeStart::One => 48,
        }
    }
}

/// Cell-level radio parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellConfig {
    pub eutra_band: u16,
    pub downlink_frequency_hz: u64,
    pub uplink_frequency_offset_hz: i64,
    pub operation_mode: OperationMode,
    pub subcarrier_spacing: SubcarrierSpacing,
}

impl CellConfig {
    /// Uplink carrier frequency; exact integer arithmetic.
    pub fn uplink_frequency_hz(&self) -> u64 {
        (self.downlink_frequency_hz as i64 + self.uplink_frequency_offset_hz) as u64
    }

    /// EARFCN this cell advertises under the given mapping, if the downlink
    /// frequency sits on the band's raster (or a known field entry).
    pub fn advertised_earfcn(&self, mapping: EarfcnMapping) -> Option<u32> {
        carrier_to_earfcn(self.eutra_band as i64, self.downlink_frequency_hz, mapping)
    }
}

/// Random-access parameters for one coverage-enhancement level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RachCeConfig {
    /// RAR response window, counted in NPDCCH periods.
    pub response_window: u32,
    /// Contention-resolution timer, counted in NPDCCH periods.
    pub contention_resolution_timer: u32,
    pub preamble_initial_target_power_dbm: i32,
    pub msg3_subcarrier_range_start: Msg3RangeStart,
    pub max_preamble_attempts_per_ce: u32,
    /// NPRACH repetitions per preamble attempt at this level.
    pub repetitions_per_attempt: u32,
}

const RESPONSE_WINDOW_VALUES: [u32; 8] = [2, 3, 4, 5, 6, 7, 8, 10];

/// Multiplier G for the NPDCCH common-search-space period, a small rational
/// (1.5 or an integer).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StartSfG {
    num: u32,
    den: u32,
}

impl StartSfG {
    pub fn from_int(v: u32) -> Self {
        Self { num: v, den: 1 }
    }

    pub const ONE_POINT_FIVE: StartSfG = StartSfG { num: 3, den: 2 };

    pub fn times(self, r_max: u32) -> Option<u64> {
        let prod = r_max as u64 * self.num as u64;
        (prod % self.den as u64 == 0).then(|| prod / self.den as u64)
    }
}

impl std::fmt::Display for StartSfG {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Offset of the common search space within its period, in eighths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CssOffset {
    Zero,
    OneEighth,
    #[default]
    OneFourth,
    ThreeEighth,
}

impl CssOffset {
    pub fn eighths(self) -> u64 {
        match self {
            CssOffset::Zero => 0,
            CssOffset::OneEighth => 1,
            CssOffset::OneFourth => 2,
            CssOffset::ThreeEighth => 3,
        }
    }
}

/// NPDCCH common-search-space timing for random access.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NpdcchCssConfig {
    /// Maximum NPDCCH repetitions; a power of two.
    pub r_max: u32,
    pub start_sf_g: StartSfG,
    pub offset_fraction: CssOffset,
}

impl NpdcchCssConfig {
    /// Search-space period T = r_max * G in subframes. Errors when the
    /// product is not an integer.
    pub fn period(&self) -> Result<u64, ExtractError> {
        self.start_sf_g.times(self.r_max).ok_or(ExtractError::NonIntegerCssPeriod {
            r_max: self.r_max,
            g: self.start_sf_g,
        })
    }

    /// Offset of candidate starts within the period: floor(fraction * T).
    pub fn offset(&self) -> Result<u64, ExtractError> {
        Ok(self.period()? * self.offset_fraction.eighths() / 8)
    }
}

/// S1/network addressing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkConfig {
    pub mme_ipv4: String,
    pub enb_s1_mme_ipv4_cidr: String,
    pub enb_s1u_ipv4_cidr: String,
    pub s1u_port: u16,
}

/// Full validated eNB configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnbConfig {
    pub cell: CellConfig,
    /// One entry per coverage-enhancement level 0..=2.
    pub rach: [RachCeConfig; 3],
    pub css: NpdcchCssConfig,
    pub network: NetworkConfig,
    pub enb_id: u32,
    pub plmn: [u8; 3],
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ExtractError {
    #[error("missing mandatory key `{0}`")]
    MissingKey(&'static str),
    #[error("key `{key}`: expected {expected}")]
    WrongType { key: &'static str, expected: &'static str },
    #[error("key `{key}`: {reason}")]
    InvalidValue { key: &'static str, reason: String },
    #[error("CSS period r_max * G = {r_max} * {g} is not an integer number of subframes")]
    NonIntegerCssPeriod { r_max: u32, g: StartSfG },
    #[error(transparent)]
    Earfcn(#[from] EarfcnError),
}

fn invalid(key: &'static str, reason: impl Into<String>) -> ExtractError {
    ExtractError::InvalidValue { key, reason: reason.into() }
}

fn opt_int(tree: &ConfigTree, key: &'static str) -> Result<Option<i64>, ExtractError> {
    match tree.get(key) {
        None => Ok(None),
        Some(ConfigValue::Int(v)) => Ok(Some(*v)),
        Some(_) => Err(ExtractError::WrongType { key, expected: "an integer" }),
    }
}

fn opt_str<'t>(tree: &'t ConfigTree, key: &'static str) -> Result<Option<&'t str>, ExtractError> {
    match tree.get(key) {
        None => Ok(None),
        Some(ConfigValue::Str(s)) => Ok(Some(s.as_str())),
        Some(_) => Err(ExtractError::WrongType { key, expected: "a string" }),
    }
}

fn check_ipv4(key: &'static str, s: &str) -> Result<(), ExtractError> {
    s.parse::<std::net::Ipv4Addr>()
        .map(|_| ())
        .map_err(|_| invalid(key, format!("`{s}` is not a dotted-quad IPv4 address")))
}

fn check_ipv4_cidr(key: &'static str, s: &str) -> Result<(), ExtractError> {
    let (addr, prefix) = s.split_once('/').unwrap_or((s, "32"));
    check_ipv4(key, addr)?;
    match prefix.parse::<u8>() {
        Ok(p) if p <= 32 => Ok(()),
        _ => Err(invalid(key, format!("`{s}` has an invalid prefix length"))),
    }
}

fn parse_rach_level(scope: &ConfigTree, base: &RachCeConfig) -> Result<RachCeConfig, ExtractError> {
    let response_window = match opt_int(scope, "rach_raResponseWindowSize_NB")? {
        None => base.response_window,
        Some(v) => {
            let v = u32::try_from(v).map_err(|_| invalid("rach_raResponseWindowSize_NB", "negative"))?;
            if !RESPONSE_WINDOW_VALUES.contains(&v) {
                return Err(invalid(
                    "rach_raResponseWindowSize_NB",
                    format!("{v} not in {RESPONSE_WINDOW_VALUES:?}"),
                ));
            }
            v
        }
    };
    let contention_resolution_timer = match opt_int(scope, "rach_macContentionResolutionTimer_NB")? {
        None => base.contention_resolution_timer,
        Some(v) if v >= 1 => v as u32,
        Some(v) => return Err(invalid("rach_macContentionResolutionTimer_NB", format!("{v} must be >= 1"))),
    };
    let preamble_initial_target_power_dbm =
        match opt_int(scope, "rach_preambleInitialReceivedTargetPower_NB")? {
            None => base.preamble_initial_target_power_dbm,
            Some(v) => i32::try_from(v)
                .map_err(|_| invalid("rach_preambleInitialReceivedTargetPower_NB", "out of range"))?,
        };
    let msg3_subcarrier_range_start = match opt_str(scope, "nrprach_SubcarrierMSG3_RangeStart")? {
        None => base.msg3_subcarrier_range_start,
        Some("zero") => Msg3RangeStart::Zero,
        Some("oneThird") => Msg3RangeStart::OneThird,
        Some("twoThird") => Msg3RangeStart::TwoThird,
        Some("one") => Msg3RangeStart::One,
        Some(other) => {
            return Err(invalid(
                "nrprach_SubcarrierMSG3_RangeStart",
                format!("`{other}` not one of zero/oneThird/twoThird/one"),
            ))
        }
    };
    let max_preamble_attempts_per_ce = match opt_int(scope, "maxNumPreambleAttemptCE_NB")? {
        None => base.max_preamble_attempts_per_ce,
        Some(v) if v >= 1 => v as u32,
        Some(v) => return Err(invalid("maxNumPreambleAttemptCE_NB", format!("{v} must be >= 1"))),
    };
    let repetitions_per_attempt = match opt_int(scope, "numRepetitionsPerPreambleAttempt")? {
        None => base.repetitions_per_attempt,
        Some(v) => {
            let v = u32::try_from(v).map_err(|_| invalid("numRepetitionsPerPreambleAttempt", "negative"))?;
            if !v.is_power_of_two() || v > 128 {
                return Err(invalid(
                    "numRepetitionsPerPreambleAttempt",
                    format!("{v} not a power of two in 1..=128"),
                ));
            }
            v
        }
    };
    Ok(RachCeConfig {
        response_window,
        contention_resolution_timer,
        preamble_initial_target_power_dbm,
        msg3_subcarrier_range_start,
        max_preamble_attempts_per_ce,
        repetitions_per_attempt,
    })
}

/// Extract and validate a full [`EnbConfig`] from a parsed tree.
///
/// Cell and random-access keys are looked up in the first
/// `component_carriers` group when one is present, otherwise at top level.
/// Scalar random-access keys apply identically to all three CE levels; an
/// optional `rach_ce_levels = ( {..}, {..}, {..} )` list overrides them per
/// level.
pub fn extract_enb_config(tree: &ConfigTree) -> Result<EnbConfig, ExtractError> {
    let carrier_scope = tree
        .get_list("component_carriers")
        .and_then(|l| l.first())
        .unwrap_or(tree);

    let eutra_band = opt_int(carrier_scope, "eutra_band")?
        .ok_or(ExtractError::MissingKey("eutra_band"))?;
    let band_offset = duplex_offset_hz(eutra_band)?;
    let eutra_band = eutra_band as u16;

    let downlink_frequency_hz = opt_int(carrier_scope, "downlink_frequency")?
        .ok_or(ExtractError::MissingKey("downlink_frequency"))?;
    if downlink_frequency_hz <= 0 {
        return Err(invalid("downlink_frequency", "must be > 0"));
    }
    let downlink_frequency_hz = downlink_frequency_hz as u64;

    let uplink_frequency_offset_hz =
        opt_int(carrier_scope, "uplink_frequency_offset")?.unwrap_or(band_offset);
    if downlink_frequency_hz as i64 + uplink_frequency_offset_hz <= 0 {
        return Err(invalid("uplink_frequency_offset", "uplink frequency must be > 0"));
    }

    let operation_mode = match opt_str(carrier_scope, "operation_mode")? {
        None | Some("standalone") => OperationMode::Standalone,
        Some("inband") => OperationMode::Inband,
        Some("guardband") => OperationMode::Guardband,
        Some(other) => return Err(invalid("operation_mode", format!("unknown mode `{other}`"))),
    };
    let subcarrier_spacing = match opt_str(carrier_scope, "subcarrier_spacing")? {
        None | Some("15kHz") => SubcarrierSpacing::Khz15,
        Some("3.75kHz") => SubcarrierSpacing::Khz3_75,
        Some(other) => return Err(invalid("subcarrier_spacing", format!("unknown spacing `{other}`"))),
    };

    let defaults = RachCeConfig {
        response_window: 8,
        contention_resolution_timer: 32,
        preamble_initial_target_power_dbm: -90,
        msg3_subcarrier_range_start: Msg3RangeStart::Zero,
        max_preamble_attempts_per_ce: 3,
        repetitions_per_attempt: 1,
    };
    let scalar = parse_rach_level(carrier_scope, &defaults)?;
    let rach: [RachCeConfig; 3] = match carrier_scope.get_list("rach_ce_levels") {
        None => [scalar.clone(), scalar.clone(), scalar],
        Some(levels) if levels.len() == 1 => {
            let one = parse_rach_level(&levels[0], &scalar)?;
            [one.clone(), one.clone(), one]
        }
        Some(levels) if levels.len() == 3 => [
            parse_rach_level(&levels[0], &scalar)?,
            parse_rach_level(&levels[1], &scalar)?,
            parse_rach_level(&levels[2], &scalar)?,
        ],
        Some(levels) => {
            return Err(invalid("rach_ce_levels", format!("expected 1 or 3 groups, found {}", levels.len())))
        }
    };

    let r_max = match opt_int(carrier_scope, "npdcch_NumRepetitions_RA")? {
        None => 4,
        Some(v) => {
            let v = u32::try_from(v).map_err(|_| invalid("npdcch_NumRepetitions_RA", "negative"))?;
            if !v.is_power_of_two() || v > 2048 {
                return Err(invalid("npdcch_NumRepetitions_RA", format!("{v} not a power of two in 1..=2048")));
            }
            v
        }
    };
    let start_sf_g = match carrier_scope.get("npdcch_StartSF_CSS_RA") {
        None => StartSfG::from_int(2),
        Some(ConfigValue::Int(v)) => {
            let v = u32::try_from(*v).map_err(|_| invalid("npdcch_StartSF_CSS_RA", "negative"))?;
            if v < 2 {
                return Err(invalid("npdcch_StartSF_CSS_RA", "integer G must be >= 2"));
            }
            StartSfG::from_int(v)
        }
        Some(ConfigValue::Str(s)) if s == "1.5" => StartSfG::ONE_POINT_FIVE,
        Some(ConfigValue::Str(s)) => {
            return Err(invalid("npdcch_StartSF_CSS_RA", format!("`{s}` is not an integer or \"1.5\"")))
        }
        Some(_) => return Err(ExtractError::WrongType { key: "npdcch_StartSF_CSS_RA", expected: "an integer or \"1.5\"" }),
    };
    let offset_fraction = match opt_str(carrier_scope, "npdcch_Offset_RA")? {
        None => CssOffset::OneFourth,
        Some("zero") => CssOffset::Zero,
        Some("oneEighth") => CssOffset::OneEighth,
        Some("oneFourth") => CssOffset::OneFourth,
        Some("threeEighth") => CssOffset::ThreeEighth,
        Some(other) => {
            return Err(invalid("npdcch_Offset_RA", format!("`{other}` not one of zero/oneEighth/oneFourth/threeEighth")))
        }
    };
    let css = NpdcchCssConfig { r_max, start_sf_g, offset_fraction };
    css.period()?; // reject non-integer period at extraction time

    let mme_ipv4 = tree
        .get_list("mme_ip_address")
        .and_then(|l| l.first())
        .and_then(|g| g.get_str("ipv4"))
        .ok_or(ExtractError::MissingKey("mme_ip_address.ipv4"))?
        .to_string();
    check_ipv4("mme_ip_address.ipv4", &mme_ipv4)?;

    let ifaces = tree.get_group("NETWORK_INTERFACES");
    let enb_s1_mme_ipv4_cidr = ifaces
        .and_then(|g| g.get_str("ENB_IPV4_ADDRESS_FOR_S1_MME"))
        .unwrap_or("127.0.0.1/24")
        .to_string();
    check_ipv4_cidr("ENB_IPV4_ADDRESS_FOR_S1_MME", &enb_s1_mme_ipv4_cidr)?;
    let enb_s1u_ipv4_cidr = ifaces
        .and_then(|g| g.get_str("ENB_IPV4_ADDRESS_FOR_S1U"))
        .unwrap_or(&enb_s1_mme_ipv4_cidr)
        .to_string();
    // control-plane-only deployment: the S1-U address must mirror S1-MME
    if enb_s1u_ipv4_cidr != enb_s1_mme_ipv4_cidr {
        return Err(invalid(
            "ENB_IPV4_ADDRESS_FOR_S1U",
            format!("control-plane-only deployment requires S1-U `{enb_s1u_ipv4_cidr}` to equal S1-MME `{enb_s1_mme_ipv4_cidr}`"),
        ));
    }
    let s1u_port = match ifaces.map(|g| opt_int(g, "ENB_PORT_FOR_S1U")).transpose()?.flatten() {
        None => 2152,
        Some(v) => u16::try_from(v).map_err(|_| invalid("ENB_PORT_FOR_S1U", "not a valid port"))?,
    };

    let enb_id = match opt_int(tree, "eNB_ID")? {
        None => 1,
        Some(v) => u32::try_from(v).map_err(|_| invalid("eNB_ID", "out of range"))?,
    };
    let mcc = opt_int(tree, "mcc")?.unwrap_or(208) as u16;
    let mnc = opt_int(tree, "mnc")?.unwrap_or(92) as u16;
    let plmn = encode_plmn(mcc, mnc);

    Ok(EnbConfig {
        cell: CellConfig {
            eutra_band,
            downlink_frequency_hz,
            uplink_frequency_offset_hz,
            operation_mode,
            subcarrier_spacing,
        },
        rach,
        css,
        network: NetworkConfig { mme_ipv4, enb_s1_mme_ipv4_cidr, enb_s1u_ipv4_cidr, s1u_port },
        enb_id,
        plmn,
    })
}

/// Standard 3-byte BCD PLMN encoding for a 2- or 3-digit MNC.
fn encode_plmn(mcc: u16, mnc: u16) -> [u8; 3] {
    let m = [(mcc / 100 % 10) as u8, (mcc / 10 % 10) as u8, (mcc % 10) as u8];
    let (n, filler) = if mnc >= 100 {
        ([(mnc / 100 % 10) as u8, (mnc / 10 % 10) as u8, (mnc % 10) as u8], false)
    } else {
        ([(mnc / 10 % 10) as u8, (mnc % 10) as u8, 0xF], true)
    };
    let third = if filler { 0xF } else { n[2] };
    [m[1] << 4 | m[0], third << 4 | m[2], n[1] << 4 | n[0]]
}

/// Parse text and extract in one step.
pub fn load_enb_config(text: &str) -> Result<EnbConfig, ConfigFileError> {
    let tree = parse_config(text)?;
    Ok(extract_enb_config(&tree)?)
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum ConfigFileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Extract(#[from] ExtractError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal() -> String {
        concat!(
            "component_carriers = ({ eutra_band = 28; downlink_frequency = 780000000L; });\n",
            "mme_ip_address = ( { ipv4 = \"10.0.0.1\"; } );\n"
        )
        .to_string()
    }

    #[test]
    fn defaults_fill_optional_keys() {
        let cfg = load_enb_config(&minimal()).unwrap();
        assert_eq!(cfg.cell.uplink_frequency_offset_hz, -55_000_000);
        assert_eq!(cfg.cell.uplink_frequency_hz(), 725_000_000);
        assert_eq!(cfg.rach[0].response_window, 8);
        assert_eq!(cfg.rach[2].repetitions_per_attempt, 1);
        assert_eq!(cfg.css.period().unwrap(), 8);
        assert_eq!(cfg.css.offset().unwrap(), 2);
        assert_eq!(cfg.network.s1u_port, 2152);
        assert_eq!(cfg.cell.advertised_earfcn(EarfcnMapping::FieldTable), Some(9448));
    }

    #[test]
    fn missing_band_is_named() {
        let err = load_enb_config("mme_ip_address = ( { ipv4 = \"10.0.0.1\"; } );").unwrap_err();
        assert!(err.to_string().contains("eutra_band"), "{err}");
    }

    #[test]
    fn missing_mme_address_is_named() {
        let err = load_enb_config("eutra_band = 28;\ndownlink_frequency = 780000000;").unwrap_err();
        assert!(err.to_string().contains("mme_ip_address"), "{err}");
    }

    #[test]
    fn scalar_rach_values_replicate_across_ce_levels() {
        let text = minimal().replace(
            "downlink_frequency = 780000000L;",
            "downlink_frequency = 780000000L; maxNumPreambleAttemptCE_NB = 5;",
        );
        let cfg = load_enb_config(&text).unwrap();
        assert!(cfg.rach.iter().all(|r| r.max_preamble_attempts_per_ce == 5));
    }

    #[test]
    fn per_level_list_overrides() {
        let text = concat!(
            "component_carriers = ({ eutra_band = 28; downlink_frequency = 780000000;\n",
            "  rach_ce_levels = (\n",
            "    { numRepetitionsPerPreambleAttempt = 1; },\n",
            "    { numRepetitionsPerPreambleAttempt = 2; },\n",
            "    { numRepetitionsPerPreambleAttempt = 8; }\n",
            "  );\n",
            "});\n",
            "mme_ip_address = ( { ipv4 = \"10.0.0.1\"; } );\n"
        );
        let cfg = load_enb_config(text).unwrap();
        assert_eq!(
            [1, 2, 8],
            [
                cfg.rach[0].repetitions_per_attempt,
                cfg.rach[1].repetitions_per_attempt,
                cfg.rach[2].repetitions_per_attempt
            ]
        );
    }

    #[test]
    fn response_window_must_be_in_value_set() {
        let text = minimal().replace(
            "downlink_frequency = 780000000L;",
            "downlink_frequency = 780000000L; rach_raResponseWindowSize_NB = 9;",
        );
        assert!(load_enb_config(&text).is_err());
    }

    #[test]
    fn g_one_point_five_period() {
        let text = minimal().replace(
            "downlink_frequency = 780000000L;",
            "downlink_frequency = 780000000L; npdcch_StartSF_CSS_RA = \"1.5\";",
        );
        let cfg = load_enb_config(&text).unwrap();
        assert_eq!(cfg.css.period().unwrap(), 6);
        assert_eq!(cfg.css.offset().unwrap(), 1); // floor(6/4)
    }

    #[test]
    fn mismatched_s1u_address_rejected() {
        let text = format!(
            "{}NETWORK_INTERFACES : {{ ENB_IPV4_ADDRESS_FOR_S1_MME = \"10.0.0.2/24\"; ENB_IPV4_ADDRESS_FOR_S1U = \"10.0.0.3/24\"; }};\n",
            minimal()
        );
        let err = load_enb_config(&text).unwrap_err();
        assert!(err.to_string().contains("control-plane-only"), "{err}");
    }

    #[test]
    fn ul_equals_dl_plus_offset_exactly() {
        for offset in [-55_000_000i64, -45_000_000, 41_000_000, 123] {
            let text = minimal().replace(
                "downlink_frequency = 780000000L;",
                &format!("downlink_frequency = 780000000L; uplink_frequency_offset = {offset};"),
            );
            let cfg = load_enb_config(&text).unwrap();
            assert_eq!(cfg.cell.uplink_frequency_hz() as i64, 780_000_000 + offset);
        }
    }

    #[test]
    fn plmn_encoding_two_digit_mnc() {
        assert_eq!(encode_plmn(208, 92), [0x02, 0xF8, 0x29]);
        assert_eq!(encode_plmn(466, 97), [0x64, 0xF6, 0x79]);
    }
}
