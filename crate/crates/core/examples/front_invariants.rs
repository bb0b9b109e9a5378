//! Classical invariants of Legendrian fronts given as event words.

use legfill::front::{parse_front, OrientedFront};

fn main() {
    for (name, text) in [
        ("unknot", "L 1 / R 1"),
        ("stabilized unknot", "L 1 / L 2 / R 1 / R 1"),
        ("fish", "L 1 / X 1 / R 1"),
        ("trefoil", "L 1 / L 2 / X 1 / X 1 / X 1 / R 2 / R 1"),
    ] {
        let of = OrientedFront::canonical(parse_front(text).unwrap());
        let (tb, rot) = of.classical_invariants();
        println!("{name}: tb={tb} rot={rot} writhe={} right_cusps={}", of.writhe(), of.front().right_cusp_count());
    }
    let trefoil = parse_front("L1 / L2 / X1 / X1 / X1 / R2 / R1").unwrap();
    print!("{}", trefoil.sketch());
}
