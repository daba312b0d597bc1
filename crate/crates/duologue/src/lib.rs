//! Session-typed communication for two-party protocols.
//!
//! A session type spells out, as an ordinary Rust type, the sequence of
//! messages one side of a conversation sends and receives. Programs that
//! compile against these types are guaranteed to follow their protocol, and
//! programs that create sessions only through [`fork`] are additionally free
//! of deadlocks and races. Failure is part of the model rather than an
//! afterthought: an endpoint may be dropped, deliberately or because its
//! thread died, and every peer then observes `None` where it would
//! otherwise block forever.
//!
//! # Protocols
//!
//! Three types describe protocols: [`Send<T, S>`](Send) sends a `T` and
//! continues as `S`, [`Recv<T, S>`](Recv) receives a `T` and continues as
//! `S`, and [`End`] is a finished conversation. Each endpoint is consumed by
//! the operation it names, which hands back the continuation endpoint, so a
//! protocol step can never be skipped or repeated:
//!
//! ```
//! use duologue::{close, fork, recv, send, End, Send};
//!
//! fn run() -> Option<()> {
//!     let s = fork(move |s: Send<(), End>| {
//!         let s = send((), s);
//!         close(s)
//!     });
//!     let ((), s) = recv(s)?;
//!     close(s)
//! }
//!
//! assert_eq!(run(), Some(()));
//! ```
//!
//! The two sides of a session have dual types: the child above holds
//! `Send<(), End>`, the parent `Recv<(), End>`. [`Session::Dual`] maps one
//! to the other and is involutive by construction.
//!
//! Protocols may refer to themselves. A type alias cannot be recursive, but
//! a one-field wrapper struct can, because the channel inside an endpoint
//! already provides the indirection:
//!
//! ```
//! use duologue::{Send, Recv, Session};
//!
//! struct IntStream(Send<i32, IntStream>);
//! struct IntStreamDual(Recv<i32, IntStreamDual>);
//!
//! impl Session for IntStream {
//!     type Dual = IntStreamDual;
//!     fn new() -> (Self, Self::Dual) {
//!         let (s, r) = <Send<i32, IntStream> as Session>::new();
//!         (IntStream(s), IntStreamDual(r))
//!     }
//! }
//!
//! impl Session for IntStreamDual {
//!     type Dual = IntStream;
//!     fn new() -> (Self, Self::Dual) {
//!         let (s, r) = IntStream::new();
//!         (r, s)
//!     }
//! }
//! ```
//!
//! # Affinity and cancellation
//!
//! Endpoints are affine: used at most once, but droppable. Using an endpoint
//! twice is a move-checker error:
//!
//! ```compile_fail
//! use duologue::{cancel, send, End, Send, Session};
//!
//! let (s, r) = <Send<i32, End> as Session>::new();
//! let c1 = send(1, s);
//! let c2 = send(2, s); // error: use of moved value `s`
//! # cancel((c1, c2, r));
//! ```
//!
//! Dropping an endpoint cancels its session. [`send`] on a cancelled
//! session still succeeds (the value is discarded, cancelling in turn any
//! endpoints it carries), while [`recv`] and [`close`] report cancellation
//! by returning `None`. The [`cancel`] function is a named drop for when
//! abandoning a session is intentional; the endpoint types are `#[must_use]`
//! so that an accidental drop at least earns a warning.
//!
//! # Branching and selection
//!
//! [`choose_left`], [`choose_right`], and [`offer_either`] build binary
//! choice out of the primitives, and the [`choose!`] and [`offer!`] macros
//! extend choice to any `enum` whose variants each wrap one session type,
//! with match exhaustiveness standing in for protocol coverage. [`select_mut`]
//! and [`select`] wait on a pool of same-typed receiving endpoints and
//! complete the first receive that becomes ready.
//!
//! # Escape hatches
//!
//! The guarantees above assume destructors run and sessions are created
//! through [`fork`]. Safe Rust offers ways around both, and this library
//! does not try to close them:
//!
//! - `std::mem::forget` discards an endpoint without running its
//!   destructor; the peer then waits forever.
//! - Reference cycles (for instance, sending an endpoint into a channel
//!   that the endpoint itself keeps alive) likewise suppress destructors
//!   by leaking.
//! - [`Session::new`] paired with `std::thread::spawn` can connect threads
//!   in cycles, which is how the classic two-channel deadlock is built.
//!   `fork`-only programs cannot form such cycles.
//! - A process that simply loops forever stalls its peers, cancellation or
//!   not.

mod choice;
mod oneshot;
mod select;
mod session;

pub use choice::{choose_left, choose_right, offer_either, Choose, Either, Offer};
pub use select::{select, select_mut};
pub use session::{cancel, close, fork, recv, send, Dual, End, Recv, Send, Session};
