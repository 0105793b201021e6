// The universal R-form, the twist θ and its square root t evaluated on the bigon.

use skeinlab::bigon::{self, r_form, t_form, t_inv_form, theta_form};
use skeinlab::diagram::SkeinElement;
use skeinlab::expr::parse_element;

pub fn run() -> skeinlab::Result<()> {
    let gens = [("a", bigon::gen_a()), ("b", bigon::gen_b()), ("c", bigon::gen_c()), ("d", bigon::gen_d())];
    for (nx, x) in &gens {
        for (ny, y) in &gens {
            let r = r_form(x, y);
            if !r.is_zero() {
                println!("R({nx} ⊗ {ny}) = {r}");
            }
        }
    }
    for (n, x) in &gens {
        println!("θ({n}) = {:<8} t({n}) = {:<8} t⁻¹({n}) = {}", theta_form(x).to_string(), t_form(x).to_string(), t_inv_form(x));
    }
    let x: SkeinElement = parse_element("a*a*d + b*c")?;
    println!("θ({x}) = {}", theta_form(&x));
    Ok(())
}

fn main() {
    run().unwrap();
}
