#[allow(dead_code)]
mod braided_opposite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/braided_opposite.rs"));
}

#[allow(dead_code)]
mod coribbon {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/coribbon.rs"));
}

#[allow(dead_code)]
mod excision {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/excision.rs"));
}

#[allow(dead_code)]
mod half_twist {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/half_twist.rs"));
}

#[allow(dead_code)]
mod hopf_structure {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hopf_structure.rs"));
}

#[allow(dead_code)]
mod reduce_diagrams {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reduce_diagrams.rs"));
}

#[allow(dead_code)]
mod rt_comodules {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rt_comodules.rs"));
}

#[allow(dead_code)]
mod st_map {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/st_map.rs"));
}

#[allow(dead_code)]
mod transport {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/transport.rs"));
}

#[allow(dead_code)]
mod verify_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_report.rs"));
}

#[test]
fn braided_opposite_runs() {
    braided_opposite::run().expect("braided_opposite example should run");
}

#[test]
fn coribbon_runs() {
    coribbon::run().expect("coribbon example should run");
}

#[test]
fn excision_runs() {
    excision::run().expect("excision example should run");
}

#[test]
fn half_twist_runs() {
    half_twist::run().expect("half_twist example should run");
}

#[test]
fn hopf_structure_runs() {
    hopf_structure::run().expect("hopf_structure example should run");
}

#[test]
fn reduce_diagrams_runs() {
    reduce_diagrams::run().expect("reduce_diagrams example should run");
}

#[test]
fn rt_comodules_runs() {
    rt_comodules::run().expect("rt_comodules example should run");
}

#[test]
fn st_map_runs() {
    st_map::run().expect("st_map example should run");
}

#[test]
fn transport_runs() {
    transport::run().expect("transport example should run");
}

#[test]
fn verify_report_runs() {
    verify_report::run().expect("verify_report example should run");
}
