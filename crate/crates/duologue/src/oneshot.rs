//! One-shot channel substrate.
//!
//! Every session endpoint wraps one half of a channel that carries exactly
//! one value. The channel tracks how many of its two halves are still alive:
//! the count starts at two, and when it drops to one the survivor observes
//! the channel as disconnected. Disconnection is how cancellation propagates:
//! a receiver that will never get a value returns `None` instead of blocking
//! forever, and a sender whose peer is gone silently discards its payload.

use std::sync::{Arc, Condvar, Mutex};

/// Shared state of one channel. `refcount` counts live halves and only ever
/// decreases; once it reaches zero the `Arc` holding this state is freed.
struct State<T> {
    refcount: u8,
    buffered: Option<T>,
    disconnected: bool,
    pool_waiter: Option<Arc<ReadySignal>>,
}

struct Channel<T> {
    state: Mutex<State<T>>,
    available: Condvar,
}

/// The transmitting half of a one-shot channel. Dropping it without sending
/// marks the channel disconnected.
pub(crate) struct Sender<T> {
    chan: Option<Arc<Channel<T>>>,
}

/// The receiving half of a one-shot channel. Dropping it without receiving
/// marks the channel disconnected and discards any value already buffered,
/// which in turn drops (cancels) any endpoints that value carries.
pub(crate) struct Receiver<T> {
    chan: Option<Arc<Channel<T>>>,
}

pub(crate) fn channel<T>() -> (Sender<T>, Receiver<T>) {
    probe::record_new();
    let chan = Arc::new(Channel {
        state: Mutex::new(State {
            refcount: 2,
            buffered: None,
            disconnected: false,
            pool_waiter: None,
        }),
        available: Condvar::new(),
    });
    let sender = Sender {
        chan: Some(chan.clone()),
    };
    let receiver = Receiver { chan: Some(chan) };
    (sender, receiver)
}

impl<T> Sender<T> {
    /// Transmits `value`. Never blocks and never fails: if the receiving half
    /// is already gone the value is dropped, cascading cancellation through
    /// any endpoints it contains.
    pub(crate) fn send(mut self, value: T) {
        probe::record_send();
        let chan = self.chan.take().expect("sender half used twice");
        let mut state = chan.state.lock().unwrap();
        let rejected = if state.disconnected {
            Some(value)
        } else {
            state.buffered = Some(value);
            None
        };
        state.refcount -= 1;
        state.disconnected = true;
        let waiter = state.pool_waiter.take();
        drop(state);
        chan.available.notify_all();
        if let Some(waiter) = waiter {
            waiter.raise();
        }
        // Cascaded drops must run outside the channel lock.
        drop(rejected);
    }
}

impl<T> Drop for Sender<T> {
    fn drop(&mut self) {
        if let Some(chan) = self.chan.take() {
            let mut state = chan.state.lock().unwrap();
            state.refcount -= 1;
            state.disconnected = true;
            let waiter = state.pool_waiter.take();
            drop(state);
            chan.available.notify_all();
            if let Some(waiter) = waiter {
                waiter.raise();
            }
        }
    }
}

impl<T> Receiver<T> {
    /// Blocks until a value is buffered or the peer half is gone. Returns
    /// `None` if the sender was dropped without transmitting.
    pub(crate) fn recv(mut self) -> Option<T> {
        probe::record_recv();
        let chan = self.chan.take().expect("receiver half used twice");
        let mut state = chan.state.lock().unwrap();
        let received = loop {
            if let Some(value) = state.buffered.take() {
                break Some(value);
            }
            if state.disconnected {
                break None;
            }
            state = chan.available.wait(state).unwrap();
        };
        state.refcount -= 1;
        state.disconnected = true;
        state.pool_waiter = None;
        received
    }

    #[cfg(test)]
    fn is_ready(&self) -> bool {
        let chan = self.chan.as_ref().expect("receiver half used twice");
        let state = chan.state.lock().unwrap();
        state.buffered.is_some() || state.disconnected
    }
}

impl<T> Drop for Receiver<T> {
    fn drop(&mut self) {
        if let Some(chan) = self.chan.take() {
            let discarded = {
                let mut state = chan.state.lock().unwrap();
                state.refcount -= 1;
                state.disconnected = true;
                state.pool_waiter = None;
                state.buffered.take()
            };
            // Cascaded drops must run outside the channel lock.
            drop(discarded);
        }
    }
}

/// Blocks until at least one receiver in `halves` has a buffered value or a
/// disconnected peer, and returns the index of the first such receiver. The
/// caller is expected to complete the corresponding receive immediately;
/// readiness is level-triggered, so nothing is lost if it rescans instead.
///
/// Panics if `halves` is empty.
pub(crate) fn ready_index<T>(halves: &[&Receiver<T>]) -> usize {
    probe::record_ready();
    assert!(!halves.is_empty(), "ready_index on an empty pool");
    let signal = Arc::new(ReadySignal::new());
    loop {
        for (index, half) in halves.iter().enumerate() {
            let chan = half.chan.as_ref().expect("receiver half used twice");
            let mut state = chan.state.lock().unwrap();
            if state.buffered.is_some() || state.disconnected {
                return index;
            }
            state.pool_waiter = Some(signal.clone());
        }
        signal.wait();
    }
}

/// Wakeup token shared between one `ready_index` call and the channels it
/// scanned. Senders raise it after making a channel ready; stale tokens left
/// behind on channels that never fired are overwritten by the next scan.
struct ReadySignal {
    raised: Mutex<bool>,
    cond: Condvar,
}

impl ReadySignal {
    fn new() -> Self {
        ReadySignal {
            raised: Mutex::new(false),
            cond: Condvar::new(),
        }
    }

    fn raise(&self) {
        let mut raised = self.raised.lock().unwrap();
        *raised = true;
        self.cond.notify_one();
    }

    fn wait(&self) {
        let mut raised = self.raised.lock().unwrap();
        while !*raised {
            raised = self.cond.wait(raised).unwrap();
        }
        *raised = false;
    }
}


#[cfg(not(test))]
pub(crate) mod probe {
    #[inline(always)]
    pub(crate) fn record_new() {}
    #[inline(always)]
    pub(crate) fn record_send() {}
    #[inline(always)]
    pub(crate) fn record_recv() {}
    #[inline(always)]
    pub(crate) fn record_ready() {}
}
