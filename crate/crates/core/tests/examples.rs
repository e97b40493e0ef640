#[allow(dead_code)]
mod field_info_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/field_info.rs"
    ));
}

#[test]
fn field_info_example_runs() {
    field_info_example::run_example().expect("field_info example should run");
}

#[allow(dead_code)]
mod finite_field_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/finite_field.rs"
    ));
}

#[test]
fn finite_field_example_runs() {
    finite_field_example::run_example().expect("finite_field example should run");
}

#[allow(dead_code)]
mod bar_cohomology_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/bar_cohomology.rs"
    ));
}

#[test]
fn bar_cohomology_example_runs() {
    bar_cohomology_example::run_example().expect("bar_cohomology example should run");
}

#[allow(dead_code)]
mod m10_cocycle_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/m10_cocycle.rs"
    ));
}

#[test]
fn m10_cocycle_example_runs() {
    m10_cocycle_example::run_example().expect("m10_cocycle example should run");
}

#[allow(dead_code)]
mod aut_cocycle_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/aut_cocycle.rs"
    ));
}

#[test]
fn aut_cocycle_example_runs() {
    aut_cocycle_example::run_example().expect("aut_cocycle example should run");
}

#[allow(dead_code)]
mod perfectness_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/perfectness.rs"
    ));
}

#[test]
fn perfectness_example_runs() {
    perfectness_example::run_example().expect("perfectness example should run");
}

#[allow(dead_code)]
mod triple_cup_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/triple_cup.rs"
    ));
}

#[test]
fn triple_cup_example_runs() {
    triple_cup_example::run_example().expect("triple_cup example should run");
}

#[allow(dead_code)]
mod verdict_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verdict.rs"));
}

#[test]
fn verdict_example_runs() {
    verdict_example::run_example().expect("verdict example should run");
}

#[allow(dead_code)]
mod family_search_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/family_search.rs"
    ));
}

#[test]
fn family_search_example_runs() {
    family_search_example::run_example().expect("family_search example should run");
}

#[allow(dead_code)]
mod class_group_sweep_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/class_group_sweep.rs"
    ));
}

#[test]
fn class_group_sweep_example_runs() {
    class_group_sweep_example::run_example().expect("class_group_sweep example should run");
}

#[allow(dead_code)]
mod golod_shafarevich_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/golod_shafarevich.rs"
    ));
}

#[test]
fn golod_shafarevich_example_runs() {
    golod_shafarevich_example::run_example().expect("golod_shafarevich example should run");
}

#[allow(dead_code)]
mod json_report_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/json_report.rs"
    ));
}

#[test]
fn json_report_example_runs() {
    json_report_example::run_example().expect("json_report example should run");
}
