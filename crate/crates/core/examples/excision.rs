// Degreewise gluing: the coproduct image, the cotensor kernel and the invariant
// subspaces all have dimension (n+1)².

use skeinlab::excision::gluing_excision_check;
use skeinlab::Specialization;

pub fn run() -> skeinlab::Result<()> {
    for s0 in Specialization::defaults() {
        for n in 0..=2 {
            let dims = gluing_excision_check(n, &s0, 1).map_err(skeinlab::Error::Arity)?;
            let variants: Vec<String> = dims.variant_dims.iter().map(|(v, k)| format!("{v}={k}")).collect();
            println!(
                "s0={s0} n={n}: expected {} image {} coalgebra {} cotensor {} {}",
                dims.expected,
                dims.basis_image_rank,
                dims.coalgebra_dim,
                dims.cotensor_dim,
                variants.join(" ")
            );
        }
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
