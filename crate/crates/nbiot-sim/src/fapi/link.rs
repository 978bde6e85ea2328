//! Two-party frame transport joining the PHY and stack halves.
//!
//! In-process mode is a pair of FIFO queues with at-most-once delivery.
//! Loopback mode sends one frame per UDP datagram on 127.0.0.1; delivery is
//! best-effort and receivers must tolerate gaps. A send-side drop plan lets
//! tests inject losses deterministically.

use super::{decode, encode, CodecError, FapiMessage};
use std::collections::BTreeSet;
use std::io;
use std::net::{Ipv4Addr, SocketAddr, SocketAddrV4, UdpSocket};
use std::sync::mpsc;
use std::time::Duration;

/// How the two halves are joined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkMode {
    InProcess,
    Loopback { port: u16 },
}

#[derive(Debug, thiserror::Error)]
pub enum LinkError {
    #[error("link transport: {0}")]
    Io(#[from] io::Error),
    #[error("peer endpoint closed")]
    Closed,
    #[error(transparent)]
    Codec(#[from] CodecError),
}

/// Handshake frame a connecting VNF endpoint sends so the bound PNF side
/// learns its address before any traffic flows.
const HELLO: &[u8] = b"NBIOT-SIM-LINK-HELLO";

enum Inner {
    Queue { tx: mpsc::Sender<Vec<u8>>, rx: mpsc::Receiver<Vec<u8>> },
    Udp { sock: UdpSocket },
}

/// One side of a link. Owned by exactly one logical task; hand the whole
/// endpoint off rather than sharing it.
pub struct Endpoint {
    inner: Inner,
    sent: u64,
    drop_plan: BTreeSet<u64>,
}

impl Endpoint {
    fn new(inner: Inner) -> Self {
        Self { inner, sent: 0, drop_plan: BTreeSet::new() }
    }

    /// Drop the n-th sent frames (0-based indices) instead of delivering
    /// them. Dropped frames still count towards the send index.
    pub fn set_drop_plan(&mut self, drops: &[u64]) {
        self.drop_plan = drops.iter().copied().collect();
    }

    pub fn send_frame(&mut self, frame: &[u8]) -> Result<(), LinkError> {
        let idx = self.sent;
        self.sent += 1;
        if self.drop_plan.contains(&idx) {
            return Ok(());
        }
        match &self.inner {
            Inner::Queue { tx, .. } => tx.send(frame.to_vec()).map_err(|_| LinkError::Closed),
            Inner::Udp { sock } => {
                sock.send(frame)?;
                Ok(())
            }
        }
    }

    /// Non-blocking receive of the next frame, if one is queued.
    pub fn try_recv_frame(&mut self) -> Result<Option<Vec<u8>>, LinkError> {
        match &self.inner {
            Inner::Queue { rx, .. } => match rx.try_recv() {
                Ok(f) => Ok(Some(f)),
                Err(mpsc::TryRecvError::Empty) => Ok(None),
                Err(mpsc::TryRecvError::Disconnected) => Err(LinkError::Closed),
            },
            Inner::Udp { sock } => {
                sock.set_nonblocking(true)?;
                let mut buf = vec![0u8; 65536];
                match sock.recv(&mut buf) {
                    Ok(n) => {
                        buf.truncate(n);
                        Ok(Some(buf))
                    }
                    Err(e) if e.kind() == io::ErrorKind::WouldBlock => Ok(None),
                    Err(e) => Err(e.into()),
                }
            }
        }
    }

    /// Blocking receive with a timeout; `None` on timeout.
    pub fn recv_frame_timeout(&mut self, timeout: Duration) -> Result<Option<Vec<u8>>, LinkError> {
        match &self.inner {
            Inner::Queue { rx, .. } => match rx.recv_timeout(timeout) {
                Ok(f) => Ok(Some(f)),
                Err(mpsc::RecvTimeoutError::Timeout) => Ok(None),
                Err(mpsc::RecvTimeoutError::Disconnected) => Err(LinkError::Closed),
            },
            Inner::Udp { sock } => {
                sock.set_nonblocking(false)?;
                sock.set_read_timeout(Some(timeout))?;
                let mut buf = vec![0u8; 65536];
                match sock.recv(&mut buf) {
                    Ok(n) => {
                        buf.truncate(n);
                        Ok(Some(buf))
                    }
                    Err(e)
                        if e.kind() == io::ErrorKind::WouldBlock
                            || e.kind() == io::ErrorKind::TimedOut =>
                    {
                        Ok(None)
                    }
                    Err(e) => Err(e.into()),
                }
            }
        }
    }

    pub fn send(&mut self, msg: &FapiMessage) -> Result<(), LinkError> {
        let frame = encode(msg)?;
        self.send_frame(&frame)
    }

    pub fn try_recv(&mut self) -> Result<Option<FapiMessage>, LinkError> {
        match self.try_recv_frame()? {
            None => Ok(None),
            Some(frame) => Ok(Some(decode(&frame)?)),
        }
    }

    pub fn recv_timeout(&mut self, timeout: Duration) -> Result<Option<FapiMessage>, LinkError> {
        match self.recv_frame_timeout(timeout)? {
            None => Ok(None),
            Some(frame) => Ok(Some(decode(&frame)?)),
        }
    }

    /// Bind the PHY-side endpoint of a two-process loopback link and wait for
    /// the stack side to announce itself.
    pub fn bind_pnf(port: u16, handshake_timeout: Duration) -> Result<Endpoint, LinkError> {
        let sock = UdpSocket::bind(SocketAddrV4::new(Ipv4Addr::LOCALHOST, port))?;
        sock.set_read_timeout(Some(handshake_timeout))?;
        let mut buf = [0u8; 64];
        loop {
            let (n, peer) = sock.recv_from(&mut buf)?;
            if &buf[..n] == HELLO {
                sock.connect(peer)?;
                return Ok(Endpoint::new(Inner::Udp { sock }));
            }
        }
    }

    /// Connect the stack-side endpoint to a bound PHY side.
    pub fn connect_vnf(port: u16) -> Result<Endpoint, LinkError> {
        let sock = UdpSocket::bind(SocketAddrV4::new(Ipv4Addr::LOCALHOST, 0))?;
        sock.connect(SocketAddr::V4(SocketAddrV4::new(Ipv4Addr::LOCALHOST, port)))?;
        sock.send(HELLO)?;
        Ok(Endpoint::new(Inner::Udp { sock }))
    }
}

/// Open both ends of a link: `(pnf_endpoint, vnf_endpoint)`.
pub fn open_link(mode: &LinkMode) -> Result<(Endpoint, Endpoint), LinkError> {
    match mode {
        LinkMode::InProcess => {
            let (to_vnf_tx, to_vnf_rx) = mpsc::channel();
            let (to_pnf_tx, to_pnf_rx) = mpsc::channel();
            Ok((
                Endpoint::new(Inner::Queue { tx: to_vnf_tx, rx: to_pnf_rx }),
                Endpoint::new(Inner::Queue { tx: to_pnf_tx, rx: to_vnf_rx }),
            ))
        }
        LinkMode::Loopback { port } => {
            let pnf_sock = UdpSocket::bind(SocketAddrV4::new(Ipv4Addr::LOCALHOST, *port))?;
            let vnf_sock = UdpSocket::bind(SocketAddrV4::new(Ipv4Addr::LOCALHOST, 0))?;
            let pnf_addr = pnf_sock.local_addr()?;
            let vnf_addr = vnf_sock.local_addr()?;
            pnf_sock.connect(vnf_addr)?;
            vnf_sock.connect(pnf_addr)?;
            Ok((
                Endpoint::new(Inner::Udp { sock: pnf_sock }),
                Endpoint::new(Inner::Udp { sock: vnf_sock }),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sfi(sfn: u16, sf: u8) -> FapiMessage {
        FapiMessage::SubframeIndication { sfn, sf }
    }

    #[test]
    fn inprocess_fifo_order() {
        let (mut pnf, mut vnf) = open_link(&LinkMode::InProcess).unwrap();
        for i in 0..3 {
            pnf.send(&sfi(i, 0)).unwrap();
        }
        for i in 0..3 {
            assert_eq!(vnf.try_recv().unwrap(), Some(sfi(i, 0)));
        }
        assert_eq!(vnf.try_recv().unwrap(), None);
    }

    #[test]
    fn loopback_delivers_all_without_loss() {
        let (mut pnf, mut vnf) = open_link(&LinkMode::Loopback { port: 0 }).unwrap();
        for i in 0..5 {
            pnf.send(&sfi(i, 1)).unwrap();
        }
        let mut got = Vec::new();
        for _ in 0..5 {
            match vnf.recv_timeout(Duration::from_millis(500)).unwrap() {
                Some(m) => got.push(m),
                None => break,
            }
        }
        assert_eq!(got.len(), 5);
        assert_eq!(got[0], sfi(0, 1));
        assert_eq!(got[4], sfi(4, 1));
    }

    #[test]
    fn injected_drop_leaves_a_gap() {
        let (mut pnf, mut vnf) = open_link(&LinkMode::Loopback { port: 0 }).unwrap();
        pnf.set_drop_plan(&[1]);
        for i in 0..3 {
            pnf.send(&sfi(i, 0)).unwrap();
        }
        let mut got = Vec::new();
        while let Some(m) = vnf.recv_timeout(Duration::from_millis(300)).unwrap() {
            got.push(m);
            if got.len() == 2 {
                break;
            }
        }
        assert_eq!(got, vec![sfi(0, 0), sfi(2, 0)]);
    }

    #[test]
    fn both_directions_work() {
        let (mut pnf, mut vnf) = open_link(&LinkMode::InProcess).unwrap();
        pnf.send(&sfi(7, 3)).unwrap();
        vnf.send(&FapiMessage::CrcIndication { rnti: 9, pass: true }).unwrap();
        assert_eq!(vnf.try_recv().unwrap(), Some(sfi(7, 3)));
        assert_eq!(pnf.try_recv().unwrap(), Some(FapiMessage::CrcIndication { rnti: 9, pass: true }));
    }
}
