// The braided opposite product computed from R and checked against stacking one
// element over the other with crossings.

use skeinlab::bigon::{braided_opposite_mul, crossed_stacking, crossed_stacking_diagram};
use skeinlab::diagram::{parse_sign_run, BasisTangle, SkeinElement};
use skeinlab::internal::check_braided_opposite;

pub fn run() -> skeinlab::Result<()> {
    let x = BasisTangle::new(parse_sign_run("+")?, parse_sign_run("+")?)?;
    let y = BasisTangle::new(parse_sign_run("+-")?, parse_sign_run("+-")?)?;
    println!("crossed diagram: {}", crossed_stacking_diagram(&x, &y));
    let (x, y) = (SkeinElement::basis(x), SkeinElement::basis(y));
    println!("m∘c(x, y)        = {}", braided_opposite_mul(&x, &y));
    println!("crossed stacking = {}", crossed_stacking(&x, &y));
    let pairs = check_braided_opposite(2).map_err(skeinlab::Error::Arity)?;
    println!("agreement on {pairs} basis pairs with at most 2 strands");
    Ok(())
}

fn main() {
    run().unwrap();
}
