// Every function here consumes a session endpoint twice. None of them may
// compile: the move checker must reject each reuse.

use duologue::{cancel, choose_left, close, recv, send, Dual, End, Offer, Send, Session};

pub fn send_twice() {
    let (s, r) = <Send<i32, End> as Session>::new();
    let c1 = send(1, s);
    let c2 = send(2, s); // reuse of `s`
    cancel((c1, c2, r));
}

pub fn recv_twice() {
    let (s, r) = <Send<i32, End> as Session>::new();
    let first = recv(r);
    let second = recv(r); // reuse of `r`
    cancel((s, first, second));
}

pub fn close_twice() {
    let (a, b) = End::new();
    let first = close(a);
    let second = close(a); // reuse of `a`
    cancel((b, first, second));
}

pub fn choose_then_reuse() {
    let (c, o) = <Dual<Offer<End, End>> as Session>::new();
    let left = choose_left(c);
    let again = choose_left(c); // reuse of `c`
    cancel((left, again, o));
}

pub fn use_after_cancel() {
    let (s, r) = <Send<i32, End> as Session>::new();
    cancel(s);
    let c = send(3, s); // reuse of `s`
    cancel((c, r));
}
