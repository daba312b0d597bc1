//! Homogeneous selection over receiving endpoints.
//!
//! Selection is restricted to receiving endpoints: sending never blocks, so
//! there is nothing to wait for on the sending side. The pool is scanned
//! front to back and the receive of the first ready endpoint is completed on
//! the spot, so the two-phase hazards of readiness-based selection (firing
//! an operation and forgetting to complete it, or completing a stale one)
//! cannot arise.

use std::marker;

use crate::oneshot;
use crate::session::{recv, Recv, Session};

/// Waits until one endpoint in `pool` is ready, completes its receive, and
/// removes it from the pool; the remaining endpoints keep their order.
///
/// Returns the received value and continuation, or `None` if the endpoint
/// that fired was cancelled by its peer; the endpoint is removed either
/// way. Readiness, not arrival order, decides which endpoint fires; no
/// fairness between simultaneously ready endpoints is promised.
///
/// Panics if the pool is empty. An empty pool is a caller error, distinct
/// from cancellation.
pub fn select_mut<T, S>(pool: &mut Vec<Recv<T, S>>) -> Option<(T, S)>
where
    T: marker::Send + 'static,
    S: Session,
{
    assert!(!pool.is_empty(), "select on an empty pool of endpoints");
    let channels: Vec<&oneshot::Receiver<(T, S)>> =
        pool.iter().map(|r| &r.channel).collect();
    let index = oneshot::ready_index(&channels);
    drop(channels);
    let fired = pool.remove(index);
    recv(fired)
}

/// By-value variant of [`select_mut`]: consumes the pool and returns the
/// remainder alongside the result.
///
/// The remainder is returned even when the fired endpoint was cancelled, so
/// the surviving sessions stay usable.
///
/// Panics if the pool is empty.
#[allow(clippy::type_complexity)]
pub fn select<T, S>(pool: Vec<Recv<T, S>>) -> (Option<(T, S)>, Vec<Recv<T, S>>)
where
    T: marker::Send + 'static,
    S: Session,
{
    let mut pool = pool;
    let result = select_mut(&mut pool);
    (result, pool)
}
