// Full run from a TOML configuration: every multiple nP of each seed yields
// a verified integer identity.
//
//     cargo run --example solve_family

use quintic_cubic::config::ConfigDocument;
use quintic_cubic::run;

const CONFIG: &str = r#"
method = "paired"
quintic_pair_coeffs = ["3", "3"]
cubic_pair_coeffs = ["17", "17"]
xs = ["1", "2"]
ys = ["1"]
family_size = 3

[[seeds]]
curve = "cubic"
x = "4"
y = "160/17"
"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = ConfigDocument::parse(CONFIG)?.pipeline_config()?;
    let report = run(&config)?;
    println!("cubic: {}", report.bridge.as_ref().expect("bridge").cubic());
    for s in &report.solutions {
        println!("{:?} mu = {}", s.source, s.mu);
        println!("  {}", s.solution);
        assert!(s.solution.is_verified());
    }
    assert_eq!(report.solutions.len(), 3);
    assert_eq!(
        report.solutions[0].solution.to_string(),
        "3·(99^5 + 45^5 + 126^5 + 18^5) = 17·(1890^3 + (-594)^3 + 891^3 + 405^3)"
    );
    Ok(())
}

fn main() {
    run_example().expect("solve_family failed");
}
