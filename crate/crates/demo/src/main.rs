//! Demo programs for the duologue session-type library.
//!
//! Exit codes: 0 when the protocol ran to completion, 1 when a session was
//! cancelled, 2 on a usage error.

use std::env;
use std::process::ExitCode;

use duologue::{
    cancel, choose, close, fork, offer, recv, select_mut, send, Dual, End, Recv, Send, Session,
};

fn main() -> ExitCode {
    let args: Vec<String> = env::args().skip(1).collect();
    let outcome = match parse(&args) {
        Ok(cmd) => run(cmd),
        Err(message) => {
            eprintln!("error: {message}");
            eprintln!(
                "usage: demo ping [--cancel]\n       demo calc <sqr|neg> <int>\n       demo fanin <n>\n       demo stream <n>"
            );
            return ExitCode::from(2);
        }
    };
    match outcome {
        Some(()) => ExitCode::SUCCESS,
        None => ExitCode::from(1),
    }
}

enum Command {
    Ping { cancel_child: bool },
    Calc { op: CalcChoice, value: i32 },
    Fanin { count: i32 },
    Stream { count: i32 },
}

enum CalcChoice {
    Sqr,
    Neg,
}

fn parse(args: &[String]) -> Result<Command, String> {
    let mut words = args.iter().map(String::as_str);
    let command = words.next().ok_or("missing command")?;
    let command = match command {
        "ping" => match words.next() {
            None => Command::Ping {
                cancel_child: false,
            },
            Some("--cancel") => Command::Ping { cancel_child: true },
            Some(other) => return Err(format!("unexpected argument `{other}`")),
        },
        "calc" => {
            let op = match words.next().ok_or("calc needs an operation")? {
                "sqr" => CalcChoice::Sqr,
                "neg" => CalcChoice::Neg,
                other => return Err(format!("unknown operation `{other}`")),
            };
            let value = words
                .next()
                .ok_or("calc needs an integer")?
                .parse::<i32>()
                .map_err(|e| format!("bad integer: {e}"))?;
            Command::Calc { op, value }
        }
        "fanin" => Command::Fanin {
            count: parse_count(words.next())?,
        },
        "stream" => Command::Stream {
            count: parse_count(words.next())?,
        },
        other => return Err(format!("unknown command `{other}`")),
    };
    if let Some(extra) = words.next() {
        return Err(format!("unexpected argument `{extra}`"));
    }
    Ok(command)
}

fn parse_count(word: Option<&str>) -> Result<i32, String> {
    let n = word
        .ok_or("missing count")?
        .parse::<i32>()
        .map_err(|e| format!("bad count: {e}"))?;
    if n < 1 {
        return Err(format!("count must be at least 1, got {n}"));
    }
    Ok(n)
}

fn run(command: Command) -> Option<()> {
    match command {
        Command::Ping { cancel_child } => ping(cancel_child),
        Command::Calc { op, value } => calc(op, value),
        Command::Fanin { count } => fanin(count),
        Command::Stream { count } => stream(count),
    }
}

/// Forks a child that sends a ping; prints "pong" once it arrives. With
/// `--cancel` the child abandons the session instead, so the receive fails
/// and the program exits 1.
fn ping(cancel_child: bool) -> Option<()> {
    let s = if cancel_child {
        fork(move |s: Send<(), End>| {
            cancel(s);
            Some(())
        })
    } else {
        fork(move |s: Send<(), End>| {
            let s = send((), s);
            close(s)
        })
    };
    let ((), s) = recv(s)?;
    close(s)?;
    println!("pong");
    Some(())
}

type SqrSrv = Recv<i32, Send<i32, End>>;
type NegSrv = Recv<i32, Send<i32, End>>;

enum CalcOp {
    Sqr(SqrSrv),
    Neg(NegSrv),
}

type CalcSrv = Recv<CalcOp, End>;
type CalcCli = Dual<CalcSrv>;

fn calc_server(s: CalcSrv) -> Option<()> {
    offer!(s, {
        CalcOp::Sqr(s) => {
            let (x, s) = recv(s)?;
            close(send(x * x, s))
        },
        CalcOp::Neg(s) => {
            let (x, s) = recv(s)?;
            close(send(-x, s))
        },
    })
}

/// Forks a calculator server offering squaring and negation, drives the
/// chosen branch as a client, and prints the reply.
fn calc(op: CalcChoice, value: i32) -> Option<()> {
    let s: CalcCli = fork(calc_server);
    let z = match op {
        CalcChoice::Sqr => {
            let s = choose!(CalcOp::Sqr, s);
            let s = send(value, s);
            let (z, s) = recv(s)?;
            close(s)?;
            z
        }
        CalcChoice::Neg => {
            let s = choose!(CalcOp::Neg, s);
            let s = send(value, s);
            let (z, s) = recv(s)?;
            close(s)?;
            z
        }
    };
    println!("{z}");
    Some(())
}

/// Forks `count` senders, each transmitting its index, then selects over the
/// receiving endpoints until the pool drains, printing values as they land
/// in whatever order the threads got scheduled.
fn fanin(count: i32) -> Option<()> {
    let mut pool: Vec<Recv<i32, End>> = Vec::new();
    for i in 0..count {
        let s = fork(move |s: Send<i32, End>| {
            let s = send(i, s);
            close(s)
        });
        pool.push(s);
    }
    loop {
        if pool.is_empty() {
            break Some(());
        }
        let (i, r) = select_mut(&mut pool)?;
        println!("{i}");
        close(r)?;
    }
}

/// Infinite stream protocol: send an integer, then continue as the same
/// protocol. The wrapper struct provides the recursion a type alias cannot.
struct IntStream(Send<i32, IntStream>);
struct IntStreamDual(Recv<i32, IntStreamDual>);

impl Session for IntStream {
    type Dual = IntStreamDual;
    fn new() -> (Self, Self::Dual) {
        let (s, r) = <Send<i32, IntStream> as Session>::new();
        (IntStream(s), IntStreamDual(r))
    }
}

impl Session for IntStreamDual {
    type Dual = IntStream;
    fn new() -> (Self, Self::Dual) {
        let (s, r) = IntStream::new();
        (r, s)
    }
}

/// Forks a producer that streams `0..count` over the recursive protocol and
/// then cancels; prints each value in order. The consumer loop reassigns the
/// continuation endpoint, so depth lives on the heap, not the stack.
fn stream(count: i32) -> Option<()> {
    let mut r = fork(move |mut s: IntStream| {
        for i in 0..count {
            let IntStream(chan) = s;
            s = send(i, chan);
        }
        cancel(s);
        Some(())
    });
    loop {
        let IntStreamDual(chan) = r;
        match recv(chan) {
            Some((i, next)) => {
                println!("{i}");
                r = next;
            }
            None => break Some(()),
        }
    }
}
