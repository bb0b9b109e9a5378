//! HOMFLY polynomials of braid closures and the tb bound they give.

use legfill::braid::BraidWord;
use legfill::homfly::{homfly, homfly_tb_bound, PlanarDiagram};

fn main() {
    let words: [(&str, usize, Vec<i32>); 3] = [
        ("trefoil", 2, vec![1, 1, 1]),
        ("figure-eight", 3, vec![1, -2, 1, -2]),
        ("m946", 4, vec![2, -3, -1, 2, 3, 1, -2, 1, 3]),
    ];
    for (name, n, letters) in words {
        let p = homfly(&PlanarDiagram::from_braid(&BraidWord::new(n, letters).unwrap()));
        println!("{name}: P={p}");
        println!("{name}: tb <= {}", homfly_tb_bound(&p).unwrap());
    }
}
