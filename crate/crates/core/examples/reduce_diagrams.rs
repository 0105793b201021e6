// Reduce stated diagrams to the basis of the bigon and compute Kauffman brackets
// of closed diagrams.

use skeinlab::diagram::{bracket, parse_diagram, parse_slice_word, reduce};
use skeinlab::oracle::naive_reduce;

pub fn run() -> skeinlab::Result<()> {
    for src in [
        "tangle(0){cup0;cap0}",
        "tangle(0){cup0} east=+-",
        "tangle(2){x0} west=+- east=-+",
        "tangle(3){x0;xb1;cap0} west=+-+ east=-",
        "tangle(2){} west=-+ east=-+",
    ] {
        let d = parse_diagram(src)?;
        let value = reduce(&d);
        assert_eq!(value, naive_reduce(&d));
        println!("{src:<40} = {value}");
    }

    for (name, src) in [
        ("unknot with a kink", "tangle(0){cup0;cup1;x2;cap1;cap0}"),
        ("Hopf link", "tangle(0){cup0;cup1;x2;x2;cap1;cap0}"),
        ("trefoil", "tangle(0){cup0;cup1;x2;x2;x2;cap1;cap0}"),
    ] {
        println!("<{name}> = {}", bracket(&parse_slice_word(src)?)?);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
