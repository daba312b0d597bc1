//! Branching, derived from the core operations.
//!
//! Choice is not a primitive: offering a choice means receiving a sum value
//! whose variants each wrap one session endpoint, and making a choice means
//! creating the session for the chosen branch and sending its dual endpoint
//! wrapped in the matching variant. [`choose_left`], [`choose_right`], and
//! [`offer_either`] implement binary choice over [`Either`]; the [`choose!`]
//! and [`offer!`](crate::offer) macros generalise this to any user `enum`
//! whose variants each wrap exactly one session.

use crate::session::{cancel, recv, send, End, Recv, Send, Session};

/// Binary sum carrying one branch endpoint.
pub enum Either<L, R> {
    Left(L),
    Right(R),
}

/// The choosing side of a binary choice between continuations `S1` and `S2`.
///
/// Transmits the dual endpoint of whichever branch is taken; the `End`
/// continuation is cancelled rather than closed, so choosing never blocks.
pub type Choose<S1, S2> =
    Send<Either<<S1 as Session>::Dual, <S2 as Session>::Dual>, End>;

/// The offering side of a binary choice between continuations `S1` and `S2`.
pub type Offer<S1, S2> = Recv<Either<S1, S2>, End>;

/// Chooses the left branch of a [`Choose<S1, S2>`](Choose), returning its
/// `S1` endpoint.
///
/// Never blocks and never fails, like [`send`]: a fresh session is created
/// for the branch and the offering peer receives its dual endpoint wrapped
/// in `Either::Left`. The leftover `End` continuation is cancelled, an
/// asynchronous stand-in for `close` that the offering side mirrors, so
/// neither side waits on it.
///
/// The generic parameters are the branch protocols as the *offering* side
/// runs them; the returned endpoint is the dual of the left one.
pub fn choose_left<O1, O2>(session: Send<Either<O1, O2>, End>) -> O1::Dual
where
    O1: Session,
    O2: Session,
{
    let (there, here) = O1::new();
    let session = send(Either::Left(there), session);
    cancel(session);
    here
}

/// Chooses the right branch of a [`Choose<S1, S2>`](Choose), returning its
/// `S2` endpoint. See [`choose_left`].
pub fn choose_right<O1, O2>(session: Send<Either<O1, O2>, End>) -> O2::Dual
where
    O1: Session,
    O2: Session,
{
    let (there, here) = O2::new();
    let session = send(Either::Right(there), session);
    cancel(session);
    here
}

/// Offers a binary choice, dispatching to `p1` or `p2` with the endpoint the
/// chooser sent.
///
/// Returns `None` if the chooser cancelled before choosing; otherwise the
/// chosen process's own result.
pub fn offer_either<S1, S2, P1, P2, R>(
    session: Offer<S1, S2>,
    p1: P1,
    p2: P2,
) -> Option<R>
where
    S1: Session,
    S2: Session,
    P1: FnOnce(S1) -> Option<R>,
    P2: FnOnce(S2) -> Option<R>,
{
    let (choice, tail) = recv(session)?;
    cancel(tail);
    match choice {
        Either::Left(s) => p1(s),
        Either::Right(s) => p2(s),
    }
}

/// Chooses a labelled branch of an `enum` whose variants each wrap one
/// session type.
///
/// `choose!(Label, s)` creates the session for the branch bound to `Label`,
/// sends the dual endpoint wrapped in that variant over `s`, cancels the
/// leftover continuation, and evaluates to the kept endpoint. The variant
/// constructor ties the branch to its protocol, so a choice can never reach
/// a handler bound to a different label. A variant that does not wrap
/// exactly one session type is rejected at compile time.
///
/// ```
/// use duologue::{choose, close, fork, offer, recv, send, Dual, End, Recv, Send, Session};
///
/// type SqrSrv = Recv<i32, Send<i32, End>>;
/// type NegSrv = Recv<i32, Send<i32, End>>;
/// enum CalcOp { Sqr(SqrSrv), Neg(NegSrv) }
/// type CalcSrv = Recv<CalcOp, End>;
/// type CalcCli = Dual<CalcSrv>;
///
/// fn server(s: CalcSrv) -> Option<()> {
///     offer!(s, {
///         CalcOp::Sqr(s) => {
///             let (x, s) = recv(s)?;
///             close(send(x * x, s))
///         },
///         CalcOp::Neg(s) => {
///             let (x, s) = recv(s)?;
///             close(send(-x, s))
///         },
///     })
/// }
///
/// fn client(s: CalcCli) -> Option<i32> {
///     let s = choose!(CalcOp::Sqr, s);
///     let s = send(4, s);
///     let (z, s) = recv(s)?;
///     close(s)?;
///     Some(z)
/// }
///
/// let s = fork(server);
/// assert_eq!(client(s), Some(16));
/// ```
///
/// A variant wrapping anything other than a session cannot be chosen; the
/// session bound fails at the call site:
///
/// ```compile_fail
/// use duologue::{choose, cancel, End, Send, Session};
///
/// enum Broken { Number(i32) }
///
/// let (cli, srv) = <Send<Broken, End> as Session>::new();
/// let s = choose!(Broken::Number, cli); // error: i32 is not a session
/// cancel((s, srv));
/// ```
#[macro_export]
macro_rules! choose {
    ($label:expr, $session:expr) => {{
        let (here, there) = <_ as $crate::Session>::new();
        let tail = $crate::send($label(there), $session);
        $crate::cancel(tail);
        here
    }};
}

/// Offers a labelled choice, dispatching on the received variant.
///
/// `offer!(s, { Label1(s) => ..., Label2(s) => ... })` receives the sum,
/// cancels the leftover continuation, and matches on the variant; each arm
/// gets the endpoint that variant wraps. The match must be exhaustive
/// (a missing variant is a compile error) and evaluates to an `Option`,
/// `None` meaning the chooser cancelled instead of choosing. See
/// [`choose!`](crate::choose) for a worked example.
///
/// ```compile_fail
/// use duologue::{offer, close, cancel, fork, recv, send, End, Recv, Send};
///
/// type Srv = Recv<i32, Send<i32, End>>;
/// enum Op { Double(Srv), Halve(Srv) }
///
/// fn server(s: Recv<Op, End>) -> Option<()> {
///     offer!(s, {
///         // error: non-exhaustive match, Op::Halve not covered
///         Op::Double(s) => {
///             let (x, s) = recv(s)?;
///             close(send(x * 2, s))
///         },
///     })
/// }
/// ```
#[macro_export]
macro_rules! offer {
    ($session:expr, { $($pattern:pat => $result:expr),+ $(,)? }) => {{
        (move || -> ::core::option::Option<_> {
            let (label, tail) = $crate::recv($session)?;
            $crate::cancel(tail);
            match label {
                $($pattern => $result),+
            }
        })()
    }};
}
