use std::time::Instant;
use hrk_core::catalog::{Recipe, survey, SurveyOptions};
use hrk_core::hrkengine::hrk_projective;
fn main() {
    let seeds = [7349u64, 7350, 7351];
    let t = Instant::now();
    let rep = Recipe::Sp(6).build().unwrap();
    let r = hrk_projective(&rep, &seeds).unwrap();
    println!("sp(6) root: {:?} hrk={}", t.elapsed(), r.hrk);
    for n in [4usize, 5, 6] {
        let t = Instant::now();
        let results = survey(n, &seeds, SurveyOptions { max_depth: 4, force_pruned: false });
        println!("survey({n}): {:?}, {} rows", t.elapsed(), results.len());
    }
}
