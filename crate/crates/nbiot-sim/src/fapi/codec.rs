//! Binary framing for [`FapiMessage`].
//!
//! Every message is one frame: an 8-byte header followed by a typed body.
//! All multi-byte fields are big-endian.
//!
//! ```text
//! header: msg_type u16 | body_len u16 | sfn u16 | sf u8 | flags u8
//! ```
//!
//! `body_len` equals the encoded body size; `sfn`/`sf` carry the subframe for
//! message types that have one and are zero otherwise. `flags` is reserved.

use super::{DlDci, DlPdu, DlPduKind, FapiMessage, SearchSpace, UlGrant, UlGrantKind};

pub const FRAME_HEADER_LEN: usize = 8;

const TYPE_SUBFRAME_INDICATION: u16 = 0x0001;
const TYPE_DL_CONFIG_REQUEST: u16 = 0x0002;
const TYPE_UL_CONFIG_REQUEST: u16 = 0x0003;
const TYPE_RACH_INDICATION: u16 = 0x0004;
const TYPE_RX_INDICATION: u16 = 0x0005;
const TYPE_CRC_INDICATION: u16 = 0x0006;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("truncated frame: {have} bytes, need {need}")]
    Truncated { have: usize, need: usize },
    #[error("header body_len {declared} does not match frame ({actual} body bytes)")]
    LengthMismatch { declared: usize, actual: usize },
    #[error("unknown message type 0x{0:04x}")]
    UnknownType(u16),
    #[error("invalid field: {0}")]
    InvalidField(&'static str),
    #[error("message too large to frame ({0} body bytes)")]
    TooLarge(usize),
}

fn put_u16(out: &mut Vec<u8>, v: u16) {
    out.extend_from_slice(&v.to_be_bytes());
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(buf: &'a [u8]) -> Self {
        Self { buf, pos: 0 }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8], CodecError> {
        if self.buf.len() - self.pos < n {
            return Err(CodecError::Truncated { have: self.buf.len(), need: self.pos + n });
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8, CodecError> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16, CodecError> {
        let b = self.take(2)?;
        Ok(u16::from_be_bytes([b[0], b[1]]))
    }

    fn done(&self) -> bool {
        self.pos == self.buf.len()
    }
}

fn check_sfn_sf(sfn: u16, sf: u8) -> Result<(), CodecError> {
    if sfn > 1023 {
        return Err(CodecError::InvalidField("sfn out of range"));
    }
    if sf > 9 {
        return Err(CodecError::InvalidField("sf out of range"));
    }
    Ok(())
}

/// Encode one message into a self-contained frame.
pub fn encode(msg: &FapiMessage) -> Result<Vec<u8>, CodecError> {
    let (msg_type, sfn, sf) = match msg {
        FapiMessage::SubframeIndication { sfn, sf } => (TYPE_SUBFRAME_INDICATION, *sfn, *sf),
        FapiMessage::DlConfigRequest { sfn, sf, .. } => (TYPE_DL_CONFIG_REQUEST, *sfn, *sf),
        FapiMessage::UlConfigRequest { sfn, sf, .. } => (TYPE_UL_CONFIG_REQUEST, *sfn, *sf),
        FapiMessage::RachIndication { sfn, sf, .. } => (TYPE_RACH_INDICATION, *sfn, *sf),
        FapiMessage::RxIndication { .. } | FapiMessage::CrcIndication { .. } => {
            (match msg {
                FapiMessage::RxIndication { .. } => TYPE_RX_INDICATION,
                _ => TYPE_CRC_INDICATION,
            }, 0, 0)
        }
    };
    check_sfn_sf(sfn, sf)?;

    let mut body = Vec::new();
    match msg {
        FapiMessage::SubframeIndication { .. } => {}
        FapiMessage::DlConfigRequest { dci_list, pdu_list, .. } => {
            if dci_list.len() > 255 || pdu_list.len() > 255 {
                return Err(CodecError::InvalidField("too many entries"));
            }
            body.push(dci_list.len() as u8);
            body.push(pdu_list.len() as u8);
            for dci in dci_list {
                put_u16(&mut body, dci.rnti);
                body.push(match dci.search_space {
                    SearchSpace::CssRa => 1,
                    SearchSpace::UeSpecific => 2,
                });
                put_u16(&mut body, dci.repetitions);
            }
            for pdu in pdu_list {
                put_u16(&mut body, pdu.rnti);
                body.push(match pdu.kind {
                    DlPduKind::Rar => 1,
                    DlPduKind::Rrc => 2,
                });
                if pdu.ce_level > 2 {
                    return Err(CodecError::InvalidField("ce_level out of range"));
                }
                body.push(pdu.ce_level);
                put_u16(&mut body, pdu.repetitions);
                let len = u16::try_from(pdu.payload.len())
                    .map_err(|_| CodecError::TooLarge(pdu.payload.len()))?;
                put_u16(&mut body, len);
                body.extend_from_slice(&pdu.payload);
            }
        }
        FapiMessage::UlConfigRequest { grants, .. } => {
            if grants.len() > 255 {
                return Err(CodecError::InvalidField("too many entries"));
            }
            body.push(grants.len() as u8);
            for g in grants {
                put_u16(&mut body, g.rnti);
                body.push(match g.kind {
                    UlGrantKind::Msg3 => 1,
                    UlGrantKind::Signaling => 2,
                    UlGrantKind::Data => 3,
                });
                if g.subcarrier > 47 {
                    return Err(CodecError::InvalidField("subcarrier out of range"));
                }
                body.push(g.subcarrier);
                put_u16(&mut body, g.repetitions);
            }
        }
        FapiMessage::RachIndication { subcarrier, ce_level_hint, .. } => {
            if *subcarrier > 47 {
                return Err(CodecError::InvalidField("subcarrier out of range"));
            }
            if *ce_level_hint > 2 {
                return Err(CodecError::InvalidField("ce_level out of range"));
            }
            body.push(*subcarrier);
            body.push(*ce_level_hint);
        }
        FapiMessage::RxIndication { rnti, payload } => {
            put_u16(&mut body, *rnti);
            let len = u16::try_from(payload.len()).map_err(|_| CodecError::TooLarge(payload.len()))?;
            put_u16(&mut body, len);
            body.extend_from_slice(payload);
        }
        FapiMessage::CrcIndication { rnti, pass } => {
            put_u16(&mut body, *rnti);
            body.push(*pass as u8);
        }
    }

    let body_len = u16::try_from(body.len()).map_err(|_| CodecError::TooLarge(body.len()))?;
    let mut frame = Vec::with_capacity(FRAME_HEADER_LEN + body.len());
    put_u16(&mut frame, msg_type);
    put_u16(&mut frame, body_len);
    put_u16(&mut frame, sfn);
    frame.push(sf);
    frame.push(0); // flags
    frame.extend_from_slice(&body);
    Ok(frame)
}

/// Decode one complete frame. Trailing or missing bytes are errors, never
/// panics.
pub fn decode(frame: &[u8]) -> Result<FapiMessage, CodecError> {
    if frame.len() < FRAME_HEADER_LEN {
        return Err(CodecError::Truncated { have: frame.len(), need: FRAME_HEADER_LEN });
    }
    let msg_type = u16::from_be_bytes([frame[0], frame[1]]);
    let body_len = u16::from_be_bytes([frame[2], frame[3]]) as usize;
    let sfn = u16::from_be_bytes([frame[4], frame[5]]);
    let sf = frame[6];
    let actual = frame.len() - FRAME_HEADER_LEN;
    if actual < body_len {
        return Err(CodecError::Truncated { have: frame.len(), need: FRAME_HEADER_LEN + body_len });
    }
    if actual > body_len {
        return Err(CodecError::LengthMismatch { declared: body_len, actual });
    }
    check_sfn_sf(sfn, sf)?;
    let mut r = Reader::new(&frame[FRAME_HEADER_LEN..]);

    let msg = match msg_type {
        TYPE_SUBFRAME_INDICATION => FapiMessage::SubframeIndication { sfn, sf },
        TYPE_DL_CONFIG_REQUEST => {
            let dci_count = r.u8()?;
            let pdu_count = r.u8()?;
            let mut dci_list = Vec::with_capacity(dci_count as usize);
            for _ in 0..dci_count {
                let rnti = r.u16()?;
                let search_space = match r.u8()? {
                    1 => SearchSpace::CssRa,
                    2 => SearchSpace::UeSpecific,
                    _ => return Err(CodecError::InvalidField("search space")),
                };
                let repetitions = r.u16()?;
                dci_list.push(DlDci { rnti, search_space, repetitions });
            }
            let mut pdu_list = Vec::with_capacity(pdu_count as usize);
            for _ in 0..pdu_count {
                let rnti = r.u16()?;
                let kind = match r.u8()? {
                    1 => DlPduKind::Rar,
                    2 => DlPduKind::Rrc,
                    _ => return Err(CodecError::InvalidField("pdu kind")),
                };
                let ce_level = r.u8()?;
                if ce_level > 2 {
                    return Err(CodecError::InvalidField("ce_level out of range"));
                }
                let repetitions = r.u16()?;
                let len = r.u16()? as usize;
                let payload = r.take(len)?.to_vec();
                pdu_list.push(DlPdu { rnti, kind, ce_level, repetitions, payload });
            }
            FapiMessage::DlConfigRequest { sfn, sf, dci_list, pdu_list }
        }
        TYPE_UL_CONFIG_REQUEST => {
            let count = r.u8()?;
            let mut grants = Vec::with_capacity(count as usize);
            for _ in 0..count {
                let rnti = r.u16()?;
                let kind = match r.u8()? {
                    1 => UlGrantKind::Msg3,
                    2 => UlGrantKind::Signaling,
                    3 => UlGrantKind::Data,
                    _ => return Err(CodecError::InvalidField("grant kind")),
                };
                let subcarrier = r.u8()?;
                if subcarrier > 47 {
                    return Err(CodecError::InvalidField("subcarrier out of range"));
                }
                let repetitions = r.u16()?;
                grants.push(UlGrant { rnti, kind, subcarrier, repetitions });
            }
            FapiMessage::UlConfigRequest { sfn, sf, grants }
        }
        TYPE_RACH_INDICATION => {
            let subcarrier = r.u8()?;
            if subcarrier > 47 {
                return Err(CodecError::InvalidField("subcarrier out of range"));
            }
            let ce_level_hint = r.u8()?;
            if ce_level_hint > 2 {
                return Err(CodecError::InvalidField("ce_level out of range"));
            }
            FapiMessage::RachIndication { sfn, sf, subcarrier, ce_level_hint }
        }
        TYPE_RX_INDICATION => {
            let rnti = r.u16()?;
            let len = r.u16()? as usize;
            let payload = r.take(len)?.to_vec();
            FapiMessage::RxIndication { rnti, payload }
        }
        TYPE_CRC_INDICATION => {
            let rnti = r.u16()?;
            let pass = match r.u8()? {
                0 => false,
                1 => true,
                _ => return Err(CodecError::InvalidField("pass flag")),
            };
            FapiMessage::CrcIndication { rnti, pass }
        }
        other => return Err(CodecError::UnknownType(other)),
    };
    if !r.done() {
        return Err(CodecError::InvalidField("trailing bytes in body"));
    }
    Ok(msg)
}
