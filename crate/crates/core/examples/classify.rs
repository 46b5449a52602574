//! Classifies every builtin algebra on both sides and prints the verdicts.
//!
//! ```text
//! cargo run --example classify [max-length]
//! ```

use std::time::Instant;

use kothe::classify::{classify_both, ClassifyOptions};
use kothe::{builtin, Algebra};

fn main() -> kothe::Result<()> {
    let length_bound = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let opts = ClassifyOptions {
        length_bound,
        ..ClassifyOptions::default()
    };
    for (name, spec) in builtin::all() {
        let started = Instant::now();
        let algebra = Algebra::new(spec);
        let (left, right) = classify_both(&algebra, name, &opts)?;
        println!("{name} ({:.2?})", started.elapsed());
        for r in [&left, &right] {
            let v = &r.verdicts;
            println!(
                "  {:5}  classes {:2}  co-Köthe {}/{}/{}  Köthe-side {}/{}/{}  serial {}  complete {}",
                r.side.to_string(),
                r.classes.len(),
                v.co_kothe,
                v.strongly_co_kothe,
                v.very_strongly_co_kothe,
                v.kothe_side,
                v.strongly_kothe_side,
                v.very_strongly_kothe_side,
                v.artinian_serial,
                r.complete,
            );
            if let Some(t) = &r.auslander {
                println!(
                    "         T dim {}  QF-2 {}  co-QF-2 {}  generalized {}/{}",
                    t.dim, t.left_qf2, t.right_co_qf2, t.generalized_left_qf2, t.generalized_right_co_qf2
                );
            }
            for c in r.consistency.iter().filter(|c| !c.passed) {
                println!("         check {} failed: {}", c.id, c.detail);
            }
        }
    }
    Ok(())
}
