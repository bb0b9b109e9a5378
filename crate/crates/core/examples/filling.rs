//! Builds a decomposable filling of a positive front by pinching, then
//! re-verifies the trace from scratch.

use legfill::cobordism::{construct_filling, format_moves, verify_trace};
use legfill::corpus::corpus_get;
use legfill::front::tanaka_orientation;

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "torus-2-5".into());
    let fx = corpus_get(&label).expect("a corpus label");
    let of = tanaka_orientation(fx.front.front()).unwrap_or(fx.front);
    match construct_filling(&of) {
        Ok(trace) => {
            println!("{trace}");
            print!("{}", format_moves(&trace.moves()));
            print!("{}", verify_trace(&trace, Some(&fx.bands)));
        }
        Err(e) => println!("{label}: {e}"),
    }
}
