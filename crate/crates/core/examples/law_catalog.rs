//! Runs the law catalog. Arguments are scale overrides, e.g. `carrier=3 bound=4`.

use std::time::Instant;

use reflekt::laws::{run_law, Scale, CATALOG, SCALE_KEYS};

fn main() {
    let mut scale = Scale::default();
    for kv in std::env::args().skip(1) {
        if let Err(e) = scale.apply(&kv) {
            eprintln!("{e}");
            std::process::exit(2);
        }
    }
    for (k, _, doc) in SCALE_KEYS {
        println!("{k:10} = {:3}  {doc}", scale.get(k));
    }
    println!();
    let mut failed = 0;
    for law in CATALOG.iter() {
        let t = Instant::now();
        let c = run_law(law.id, &scale).expect("catalog id");
        println!("{:4} {:28} {:7} {:6.2}s  {}", law.id, law.slug, format!("{:?}", c.status), t.elapsed().as_secs_f64(), law.statement);
        if !c.passed() {
            failed += 1;
            println!("     witness: {}", c.witness.unwrap_or_default());
        }
    }
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
