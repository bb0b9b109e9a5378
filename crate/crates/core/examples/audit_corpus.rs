//! Runs the conjecture audit on every bundled knot.

use legfill::audit::audit;
use legfill::corpus::corpus_all;

fn main() {
    let json = std::env::args().any(|a| a == "--json");
    for fx in corpus_all() {
        match audit(fx.label, &fx.bands, &fx.front, &fx.script) {
            Ok(r) if json => println!("{}", r.to_json()),
            Ok(r) => println!("{r}"),
            Err(e) => println!("label={}\nerror={e}\n", fx.label),
        }
    }
}
