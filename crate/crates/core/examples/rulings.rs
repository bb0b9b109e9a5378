//! Normal rulings of a front, and the all-switched oriented ruling that
//! feeds the filling construction.

use legfill::corpus::corpus_get;
use legfill::ruling::{enumerate_rulings, find_all_switched_oriented, unlinked_resolution};

fn main() {
    for label in ["trefoil", "torus-2-5", "fish"] {
        let of = corpus_get(label).unwrap().front;
        let all = enumerate_rulings(&of, false);
        let oriented = enumerate_rulings(&of, true);
        println!("{label}: {} normal, {} oriented", all.len(), oriented.len());
        for r in &all {
            println!("  {r}");
        }
        if let Some(r) = find_all_switched_oriented(&of) {
            println!("  all switched, unlinked resolution: {}", unlinked_resolution(of.front(), &r));
        }
    }
}
