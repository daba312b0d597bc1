//! Protocol types, duality, and the five endpoint operations.

use std::marker;
use std::panic::{self, AssertUnwindSafe};
use std::thread;

use crate::oneshot;

/// A session type: a protocol description that knows its own dual.
///
/// The `Session<Dual = Self>` constraint on the associated type makes
/// duality involutive (`S::Dual::Dual` is `S` for every session type) and
/// is checked by the compiler at every instantiation.
pub trait Session: marker::Send + Sized + 'static {
    /// The protocol seen from the other side: every `Send` becomes a `Recv`
    /// and vice versa. `End` is self-dual.
    type Dual: Session<Dual = Self>;

    /// Creates a new session and returns its two connected dual endpoints.
    ///
    /// This is not part of the supported surface: safe programs obtain
    /// endpoints from [`fork`](crate::fork), which pairs every session with
    /// a fresh thread and thereby keeps communication deadlock-free. `new`
    /// is nevertheless exported, since a trait cannot hide a member, and
    /// implementing [`Session`] for a recursive wrapper type requires
    /// delegating to it. Combining `new` with `std::thread::spawn` makes it
    /// easy to build cyclic topologies that deadlock; see the crate docs.
    fn new() -> (Self, Self::Dual);
}

/// Shorthand for the other side of a protocol: `Dual<S>` is `S::Dual`.
pub type Dual<S> = <S as Session>::Dual;

/// Sends a `T`, then continues as `S`.
///
/// The endpoint is consumed by [`send`]; dropping it instead cancels the
/// session.
#[must_use]
pub struct Send<T, S>
where
    T: marker::Send + 'static,
    S: Session,
{
    pub(crate) channel: oneshot::Sender<(T, S::Dual)>,
}

/// Receives a `T`, then continues as `S`.
///
/// The endpoint is consumed by [`recv`]; dropping it instead cancels the
/// session.
#[must_use]
pub struct Recv<T, S>
where
    T: marker::Send + 'static,
    S: Session,
{
    pub(crate) channel: oneshot::Receiver<(T, S)>,
}

/// A completed session, consumed by [`close`].
///
/// Internally a pair of unit channels arranged crosswise, so that the two
/// `close` calls synchronise: each sends on one channel and then blocks
/// receiving on the other.
#[must_use]
pub struct End {
    pub(crate) sender: oneshot::Sender<()>,
    pub(crate) receiver: oneshot::Receiver<()>,
}

impl<T, S> Session for Send<T, S>
where
    T: marker::Send + 'static,
    S: Session,
{
    type Dual = Recv<T, S::Dual>;

    fn new() -> (Self, Self::Dual) {
        let (sender, receiver) = oneshot::channel();
        (Send { channel: sender }, Recv { channel: receiver })
    }
}

impl<T, S> Session for Recv<T, S>
where
    T: marker::Send + 'static,
    S: Session,
{
    type Dual = Send<T, S::Dual>;

    fn new() -> (Self, Self::Dual) {
        let (there, here) = Self::Dual::new();
        (here, there)
    }
}

impl Session for End {
    type Dual = End;

    fn new() -> (Self, Self::Dual) {
        let (sender_a, receiver_a) = oneshot::channel();
        let (sender_b, receiver_b) = oneshot::channel();
        let end_a = End {
            sender: sender_a,
            receiver: receiver_b,
        };
        let end_b = End {
            sender: sender_b,
            receiver: receiver_a,
        };
        (end_a, end_b)
    }
}

/// Sends `value` on the session and returns the continuation endpoint.
///
/// Sending is non-blocking and never fails. A new session is created for the
/// continuation and its dual endpoint travels with the value; if the peer
/// has cancelled, the value and that endpoint are dropped, which cancels any
/// sessions they carry.
pub fn send<T, S>(value: T, session: Send<T, S>) -> S
where
    T: marker::Send + 'static,
    S: Session,
{
    let (here, there) = S::new();
    session.channel.send((value, there));
    here
}

/// Receives a value from the session, returning it together with the
/// continuation endpoint.
///
/// Receiving blocks until the peer sends, and returns `None` if the session
/// was cancelled. Callers typically short-circuit with `?`.
pub fn recv<T, S>(session: Recv<T, S>) -> Option<(T, S)>
where
    T: marker::Send + 'static,
    S: Session,
{
    session.channel.recv()
}

/// Closes a completed session.
///
/// Closing is synchronous: it blocks until the dual endpoint is also closed,
/// and neither call returns `Some(())` before both have begun. Closing a
/// cancelled session returns `None`.
pub fn close(session: End) -> Option<()> {
    let End { sender, receiver } = session;
    sender.send(());
    receiver.recv()?;
    Some(())
}

/// Cancels a session explicitly by dropping its argument.
///
/// Dropping an endpoint has the same effect; `cancel` only marks the intent,
/// silencing the unused-value warning that an implicit drop would earn. Any
/// endpoints reachable inside `value` observe cancellation: their peers'
/// blocking operations return `None` instead of waiting forever.
pub fn cancel<T>(_value: T) {}

/// Creates a new session, spawns a thread running `process` on one endpoint,
/// and returns the dual endpoint.
///
/// The process may fail by returning `None` or by panicking; either way the
/// failure stays in the child thread, and every endpoint it still owned is
/// dropped and therefore cancelled: peers observe `None` rather than a
/// crash.
pub fn fork<S, P>(process: P) -> S::Dual
where
    S: Session,
    P: FnOnce(S) -> Option<()> + marker::Send + 'static,
{
    let (there, here) = S::new();
    thread::spawn(move || {
        let _ = panic::catch_unwind(AssertUnwindSafe(move || process(there)));
    });
    here
}
