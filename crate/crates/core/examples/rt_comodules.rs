// Reshetikhin–Turaev matrices of tangles, tensor powers of the standard comodule and
// the symmetric powers V_n.

use skeinlab::comodule::{braiding_matrix, ht_matrix, multiplicity, quantum_plane_vn, rt_evaluate, standard_v, Matrix};
use skeinlab::diagram::parse_slice_word;

fn show(name: &str, m: &Matrix) {
    println!("{name}:");
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>12}", x.to_string())).collect();
        println!("  [{}]", cells.join(" "));
    }
}

pub fn run() -> skeinlab::Result<()> {
    show("crossing on V⊗V", &rt_evaluate(&parse_slice_word("tangle(2){x0}")?));
    show("braiding from R", &braiding_matrix(&standard_v(), &standard_v()));
    show("cup", &rt_evaluate(&parse_slice_word("tangle(0){cup0}")?));
    for n in 0..=3 {
        let v = quantum_plane_vn(n);
        v.check_coassociative().map_err(skeinlab::Error::Arity)?;
        show(&format!("half twist on V_{n}"), &ht_matrix(&v));
    }
    for n in 1..=4 {
        let line: Vec<String> = (0..=n).map(|k| multiplicity(k, n).to_string()).collect();
        println!("multiplicities of V_k in V^⊗{n}: {}", line.join(" "));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
