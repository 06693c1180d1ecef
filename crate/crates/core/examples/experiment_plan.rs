// Run a small experiment plan and print the CSV files it writes.

use graphon::experiments::{parse_plan, run_plan};

const PLAN: &str = r#"
[[experiment]]
name = "type_one"
kind = "test_errors"
fixture = "erdos_renyi"
n_list = [100, 200]
trials = 20
hypothesis = "null"

[[experiment]]
name = "dimension"
kind = "dimension_error"
fixture = "geometric"
n_list = [200, 400]
trials = 3
seed = 100
"#;

pub fn run() -> graphon::Result<()> {
    let plan = parse_plan(PLAN)?;
    let dir = std::env::temp_dir().join("graphon-example-plan");
    for path in run_plan(&plan, &dir)? {
        let text = std::fs::read_to_string(&path)?;
        println!("== {} ({} lines)", path.display(), text.lines().count());
        for line in text.lines().take(4) {
            println!("{line}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
