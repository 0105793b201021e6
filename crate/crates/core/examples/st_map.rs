// The map St from Temperley–Lieb diagrams into the bigon algebra, with its rank
// compared to Catalan and Peter–Weyl counts.

use skeinlab::internal::{arities, check_intertwiner, st_map, st_rank};
use skeinlab::matching::enumerate_matchings;
use skeinlab::Specialization;

pub fn run() -> skeinlab::Result<()> {
    let m = &enumerate_matchings(1, 1)?[0];
    for ((w, e), v) in st_map(m) {
        let w: String = w.iter().map(|s| s.as_char()).collect();
        let e: String = e.iter().map(|s| s.as_char()).collect();
        println!("St(id)[{w};{e}] = {v}");
    }
    let s0 = &Specialization::defaults()[0];
    println!("{:>4} {:>4} {:>6} {:>8} {:>11}", "west", "east", "rank", "Catalan", "Peter-Weyl");
    for (nw, ne) in arities(6) {
        for m in enumerate_matchings(nw, ne)? {
            check_intertwiner(&m).map_err(skeinlab::Error::Arity)?;
        }
        let r = st_rank(nw, ne, s0)?;
        println!("{nw:>4} {ne:>4} {:>6} {:>8} {:>11}", r.rank, r.catalan, r.peter_weyl);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
