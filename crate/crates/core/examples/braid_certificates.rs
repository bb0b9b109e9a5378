//! Positivity certificates and the slice Euler characteristic of band
//! presentations.

use legfill::braid::{classify_certificate, parse_bands, parse_braid, Certificate};

fn main() {
    let stoimenow = parse_bands(include_str!("../corpus/stoimenow.bands")).unwrap();
    let word = stoimenow.expand();
    println!("bands={} strands={} letters={}", stoimenow.bands().len(), word.strands(), word.len());
    println!("knot={} chi4={}", word.is_knot(), stoimenow.chi4());
    println!("level={}", classify_certificate(Certificate::Bands(&stoimenow)));

    let m946 = parse_bands(include_str!("../corpus/m946.bands")).unwrap();
    println!("m946 level={} chi4={}", classify_certificate(Certificate::Bands(&m946)), m946.chi4());

    let t = parse_braid("n=2\n1 1 1\n").unwrap();
    println!("sigma1^3 level={}", classify_certificate(Certificate::Word(&t)));
}
