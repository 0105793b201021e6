// Move between the bigon basis and PBW monomials in a, b, c, d, and pair with the
// quantized enveloping algebra.

use skeinlab::diagram::SkeinElement;
use skeinlab::expr::parse_element;
use skeinlab::sl2::{self, HopfElement, UGenerator};

pub fn run() -> skeinlab::Result<()> {
    let x: HopfElement = parse_element("d*a + b^2*c")?;
    let skein = sl2::to_skein(&x);
    println!("PBW form   {x}");
    println!("skein form {skein}");
    assert_eq!(sl2::from_skein(&skein), x);

    let y: SkeinElement = parse_element("beta(++-;+--)")?;
    println!("{y} = {}", sl2::from_skein(&y));

    use UGenerator::{E, F, K};
    for word in [vec![K], vec![E], vec![F], vec![E, F]] {
        let names: Vec<String> = word.iter().map(|g| g.to_string()).collect();
        println!("<{}, b c> = {}", names.join(""), sl2::pairing(&word, &sl2::normalize(&[sl2::Letter::B, sl2::Letter::C])));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
