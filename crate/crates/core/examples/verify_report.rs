// Run a verification suite and print its JSON report.

use skeinlab::verify::{run_suite, Params};

pub fn run() -> skeinlab::Result<()> {
    let params = Params { max_degree: 2, ..Params::default() };
    let report = run_suite("hopf", &params)?;
    println!("{report}");
    println!("{}", report.to_json());
    assert!(report.status.is_pass());
    Ok(())
}

fn main() {
    run().unwrap();
}
