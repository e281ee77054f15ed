//! Every example runs to completion.

#[path = "../examples/cobar.rs"]
mod cobar;
#[path = "../examples/coproduct_antipode.rs"]
mod coproduct_antipode;
#[path = "../examples/gk_growth.rs"]
mod gk_growth;
#[path = "../examples/grading.rs"]
mod grading;
#[path = "../examples/hopf_axioms.rs"]
mod hopf_axioms;
#[path = "../examples/lie_subalgebra.rs"]
mod lie_subalgebra;
#[path = "../examples/normal_forms.rs"]
mod normal_forms;
#[path = "../examples/orbit.rs"]
mod orbit;
#[path = "../examples/presentation_file.rs"]
mod presentation_file;
#[path = "../examples/skew_primitives.rs"]
mod skew_primitives;
#[path = "../examples/subalgebra_data.rs"]
mod subalgebra_data;

#[test]
fn examples_run() {
    normal_forms::run().unwrap();
    coproduct_antipode::run().unwrap();
    hopf_axioms::run().unwrap();
    skew_primitives::run().unwrap();
    orbit::run().unwrap();
    subalgebra_data::run().unwrap();
    gk_growth::run().unwrap();
    lie_subalgebra::run().unwrap();
    cobar::run().unwrap();
    grading::run().unwrap();
    presentation_file::run().unwrap();
}
