// Inversion along an edge and the half twist coaction that undoes it.

use skeinlab::bigon::{self, ht_coaction, inv_edge, t_form, Edge};
use skeinlab::diagram::SkeinElement;
use skeinlab::expr::parse_element;

pub fn run() -> skeinlab::Result<()> {
    let x: SkeinElement = parse_element("a*b + 2*c - beta(+-;--)")?;
    for edge in [Edge::East, Edge::West] {
        let y = inv_edge(&x, edge, false);
        println!("inv_{edge:?}(x) = {y}");
        assert_eq!(inv_edge(&y, edge, true), x);
    }
    let h = ht_coaction(&x);
    println!("ht(x)         = {h}");
    assert_eq!(inv_edge(&h, Edge::East, false), x);
    println!("t(x)          = {}", t_form(&x));
    println!("ε(inv⁻¹(x))   = {}", bigon::counit(&inv_edge(&x, Edge::East, true)));
    Ok(())
}

fn main() {
    run().unwrap();
}
