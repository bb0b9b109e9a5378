//! Replays the bundled disk filling of m(9_46) and compares the HOMFLY
//! polynomial of its end with that of an independent braid.

use legfill::cobordism::{replay_script, verify_trace};
use legfill::corpus::corpus_get;
use legfill::homfly::{homfly, homfly_tb_bound, PlanarDiagram};

fn main() {
    let fx = corpus_get("m946").unwrap();
    let trace = replay_script(&fx.script).unwrap();
    println!("{trace}");
    print!("{}", verify_trace(&trace, Some(&fx.bands)));
    let end = homfly(&trace.end().to_planar_diagram());
    let braid = homfly(&PlanarDiagram::from_braid(&fx.braid));
    println!("end homfly={end}");
    println!("braid homfly={braid}");
    println!("equal={} bound={}", end == braid, homfly_tb_bound(&end).unwrap());
}
