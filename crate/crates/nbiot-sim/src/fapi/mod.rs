//! PHY/stack split messages and transport.
//!
//! The eNB runs either monolithic (PHY and stack in one process, joined by an
//! in-process queue) or split (PHY side as a PNF, stack side as a VNF,
//! exchanging framed datagrams over the UDP loopback). One
//! [`FapiMessage::SubframeIndication`] per simulated millisecond paces the
//! stack side, mirroring how the split slaves stack timing to the PHY.

mod codec;
mod link;

pub use codec::{decode, encode, CodecError, FRAME_HEADER_LEN};
pub use link::{open_link, Endpoint, LinkError, LinkMode};

/// NPDCCH search space a DCI is transmitted in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSpace {
    /// Common search space used for random access (RA-RNTI / temp C-RNTI).
    CssRa,
    /// UE-specific search space.
    UeSpecific,
}

/// Downlink control information entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlDci {
    pub rnti: u16,
    pub search_space: SearchSpace,
    pub repetitions: u16,
}

/// What a downlink PDU carries, for PHY-side delivery rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DlPduKind {
    /// Random access response; addressed by RA-RNTI.
    Rar,
    /// RRC message addressed by (temp) C-RNTI.
    Rrc,
}

/// Downlink payload to put on the air.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlPdu {
    pub rnti: u16,
    pub kind: DlPduKind,
    pub ce_level: u8,
    pub repetitions: u16,
    pub payload: Vec<u8>,
}

/// What an uplink grant is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UlGrantKind {
    Msg3,
    Signaling,
    Data,
}

/// Uplink transmission opportunity for one RNTI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlGrant {
    pub rnti: u16,
    pub kind: UlGrantKind,
    pub subcarrier: u8,
    pub repetitions: u16,
}

/// Messages crossing the PHY/stack boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FapiMessage {
    /// PHY -> stack, once per subframe; paces the scheduler.
    SubframeIndication { sfn: u16, sf: u8 },
    /// Stack -> PHY: transmissions starting at (sfn, sf).
    DlConfigRequest { sfn: u16, sf: u8, dci_list: Vec<DlDci>, pdu_list: Vec<DlPdu> },
    /// Stack -> PHY: uplink opportunities opening at (sfn, sf).
    UlConfigRequest { sfn: u16, sf: u8, grants: Vec<UlGrant> },
    /// PHY -> stack: detected preamble.
    RachIndication { sfn: u16, sf: u8, subcarrier: u8, ce_level_hint: u8 },
    /// PHY -> stack: decoded uplink payload.
    RxIndication { rnti: u16, payload: Vec<u8> },
    /// PHY -> stack: decode outcome (uplink CRC result or downlink HARQ feedback).
    CrcIndication { rnti: u16, pass: bool },
}

impl FapiMessage {
    pub fn type_name(&self) -> &'static str {
        match self {
            FapiMessage::SubframeIndication { .. } => "SubframeIndication",
            FapiMessage::DlConfigRequest { .. } => "DlConfigRequest",
            FapiMessage::UlConfigRequest { .. } => "UlConfigRequest",
            FapiMessage::RachIndication { .. } => "RachIndication",
            FapiMessage::RxIndication { .. } => "RxIndication",
            FapiMessage::CrcIndication { .. } => "CrcIndication",
        }
    }
}
