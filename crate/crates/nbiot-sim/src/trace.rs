//! Tagged event trace shared by every simulated component.
//!
//! The tag set mirrors the filter conditions of the BC95 log viewer tooling,
//! so a filtered simulator trace reads like a filtered modem debug log.

use crate::clock::AbsSf;
use std::collections::BTreeSet;
use std::fmt;

/// Closed set of trace tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    /// RRC-layer messages seen at the UE.
    RrcDebugAsn,
    /// NAS-layer messages.
    NasDbgNasMsg,
    /// Downlink control information and NPDCCH scheduling.
    Dci,
    /// HARQ ACK/NACK outcomes.
    Harq,
    /// Random-access procedure events.
    Rach,
}

impl Tag {
    pub const ALL: [Tag; 5] = [Tag::RrcDebugAsn, Tag::NasDbgNasMsg, Tag::Dci, Tag::Harq, Tag::Rach];

    pub fn name(self) -> &'static str {
        match self {
            Tag::RrcDebugAsn => "RRC_DEBUG_ASN",
            Tag::NasDbgNasMsg => "NAS_DBG_NAS_MSG",
            Tag::Dci => "DCI",
            Tag::Harq => "HARQ",
            Tag::Rach => "RACH",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("unknown trace tag `{given}`; valid tags: {valid}")]
pub struct UnknownTag {
    pub given: String,
    pub valid: String,
}

/// Parse one tag name (as printed in trace lines and accepted by `--filter`).
pub fn parse_tag(name: &str) -> Result<Tag, UnknownTag> {
    Tag::ALL
        .iter()
        .copied()
        .find(|t| t.name() == name)
        .ok_or_else(|| UnknownTag {
            given: name.to_string(),
            valid: Tag::ALL.map(|t| t.name()).join(", "),
        })
}

/// Parse a comma-separated tag set, e.g. `RACH,DCI`.
pub fn parse_tag_set(list: &str) -> Result<BTreeSet<Tag>, UnknownTag> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_tag)
        .collect()
}

/// Which simulated component emitted an event. The order here is the
/// per-tick processing order and therefore the trace tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    Phy,
    Enb,
    Mme,
    Ue,
}

impl Component {
    pub fn name(self) -> &'static str {
        match self {
            Component::Phy => "phy",
            Component::Enb => "enb",
            Component::Mme => "mme",
            Component::Ue => "ue",
        }
    }
}

/// One trace event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub abs_sf: AbsSf,
    pub tag: Tag,
    pub source: Component,
    /// Entity id within the component (UE index, always 0 for single
    /// eNB/MME/PHY instances).
    pub entity: u32,
    pub detail: String,
    /// Emission sequence number; final ordering tie-breaker.
    pub seq: u64,
}

impl TraceEvent {
    /// Total order key: (abs_sf, component order, entity id, emission seq).
    pub fn order_key(&self) -> (u64, Component, u32, u64) {
        (self.abs_sf.0, self.source, self.entity, self.seq)
    }

    /// Render as one trace line: `[<abs_sf>] <TAG> <component>/<entity> <detail>`.
    pub fn render(&self) -> String {
        format!("[{}] {} {}/{} {}", self.abs_sf, self.tag, self.source.name(), self.entity, self.detail)
    }
}

/// Order-preserving subset of `events` whose tag is in `tags`.
pub fn filter_trace<'a>(events: &'a [TraceEvent], tags: &BTreeSet<Tag>) -> Vec<&'a TraceEvent> {
    events.iter().filter(|e| tags.contains(&e.tag)).collect()
}

/// Append-only event log handed around the event loop.
#[derive(Debug, Default)]
pub struct TraceLog {
    events: Vec<TraceEvent>,
    seq: u64,
}

impl TraceLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn emit(&mut self, abs_sf: AbsSf, tag: Tag, source: Component, entity: u32, detail: impl Into<String>) {
        let seq = self.seq;
        self.seq += 1;
        self.events.push(TraceEvent { abs_sf, tag, source, entity, detail: detail.into(), seq });
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn into_events(self) -> Vec<TraceEvent> {
        self.events
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(abs: u64, tag: Tag, detail: &str) -> TraceEvent {
        TraceEvent { abs_sf: AbsSf(abs), tag, source: Component::Ue, entity: 0, detail: detail.into(), seq: abs }
    }

    #[test]
    fn filter_keeps_order_and_subset() {
        let events = vec![ev(1, Tag::Rach, "a"), ev(2, Tag::Dci, "b"), ev(3, Tag::Rach, "c")];
        let tags: BTreeSet<Tag> = [Tag::Rach].into_iter().collect();
        let got = filter_trace(&events, &tags);
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].detail, "a");
        assert_eq!(got[1].detail, "c");
    }

    #[test]
    fn filter_all_is_identity_and_empty_is_empty() {
        let events = vec![ev(1, Tag::Rach, "a"), ev(2, Tag::Harq, "b")];
        let all: BTreeSet<Tag> = Tag::ALL.into_iter().collect();
        assert_eq!(filter_trace(&events, &all).len(), events.len());
        assert!(filter_trace(&events, &BTreeSet::new()).is_empty());
    }

    #[test]
    fn filter_is_idempotent() {
        let events = vec![ev(1, Tag::Rach, "a"), ev(2, Tag::Dci, "b"), ev(3, Tag::Harq, "c")];
        let tags: BTreeSet<Tag> = [Tag::Rach, Tag::Harq].into_iter().collect();
        let once: Vec<TraceEvent> = filter_trace(&events, &tags).into_iter().cloned().collect();
        let twice: Vec<TraceEvent> = filter_trace(&once, &tags).into_iter().cloned().collect();
        assert_eq!(once, twice);
    }

    #[test]
    fn unknown_tag_lists_valid_ones() {
        let err = parse_tag("NOPE").unwrap_err();
        assert!(err.to_string().contains("RRC_DEBUG_ASN"));
        assert!(err.to_string().contains("RACH"));
    }

    #[test]
    fn tag_set_parses_mixed_list() {
        let set = parse_tag_set("RACH, DCI").unwrap();
        assert!(set.contains(&Tag::Rach) && set.contains(&Tag::Dci));
        assert!(parse_tag_set("RACH,BOGUS").is_err());
    }
}
