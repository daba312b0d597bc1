// Control for the double-use probe: the same shapes with every endpoint
// consumed exactly once. This file must compile, proving that the failures
// in double_use.rs come from the reuse and nothing else.

use duologue::{cancel, choose_left, close, recv, send, Dual, End, Offer, Send, Session};

pub fn send_once() {
    let (s, r) = <Send<i32, End> as Session>::new();
    let c1 = send(1, s);
    cancel((c1, r));
}

pub fn recv_once() {
    let (s, r) = <Send<i32, End> as Session>::new();
    let first = recv(r);
    cancel((s, first));
}

pub fn close_once() {
    let (a, b) = End::new();
    let first = close(a);
    cancel((b, first));
}

pub fn choose_once() {
    let (c, o) = <Dual<Offer<End, End>> as Session>::new();
    let left = choose_left(c);
    cancel((left, o));
}

pub fn cancel_once() {
    let (s, r) = <Send<i32, End> as Session>::new();
    cancel(s);
    cancel(r);
}
