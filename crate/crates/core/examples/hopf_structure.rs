// Product, coproduct, counit, antipode and the rotation automorphism of the bigon algebra.

use skeinlab::bigon::{self, antipode, comul, counit, mul, rot_star};
use skeinlab::diagram::SkeinElement;
use skeinlab::expr::parse_element;
use skeinlab::HalfLaurent;

pub fn run() -> skeinlab::Result<()> {
    let (a, b, c, d) = (bigon::gen_a(), bigon::gen_b(), bigon::gen_c(), bigon::gen_d());
    let q2 = HalfLaurent::q_pow(-2);
    println!("a d - q^-2 b c = {}", &mul(&a, &d) - &mul(&b, &c).scale(&q2));
    println!("c a           = {}", mul(&c, &a));

    let x: SkeinElement = parse_element("a*b + 2*d - s^3*beta(+-;+-)")?;
    println!("x       = {x}");
    println!("Δ(x)    = {}", comul(&x));
    println!("ε(x)    = {}", counit(&x));
    println!("S(x)    = {}", antipode(&x));
    println!("rot(x)  = {}", rot_star(&x));
    assert_eq!(rot_star(&rot_star(&x)), x);
    assert_eq!(antipode(&mul(&x, &a)), mul(&antipode(&a), &antipode(&x)));
    Ok(())
}

fn main() {
    run().unwrap();
}
