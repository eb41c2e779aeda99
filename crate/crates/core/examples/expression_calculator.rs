//! Evaluating calculator expressions from the library.
//!
//! Pass expressions as arguments, or run without arguments for a demo set.

use degen_pga::cli::{evaluate, EvalOptions};
use degen_pga::DualityConfig;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let demo = [
        "e123 & e032",
        "e0 & e123",
        "!(e0)",
        "e1 * !(e0)",
        "J(e12)",
        "(e1 + e2) ^ e0",
    ];
    let inputs: Vec<String> = if args.is_empty() {
        demo.iter().map(|s| s.to_string()).collect()
    } else {
        args
    };
    for (label, cfg) in [
        ("strict", DualityConfig::strict()),
        ("lenient", DualityConfig::lenient()),
    ] {
        println!("[{label}]");
        let opts = EvalOptions {
            cfg,
            ..EvalOptions::default()
        };
        for src in &inputs {
            match evaluate(src, &opts) {
                Ok(v) => println!("  {src:<16} = {v}"),
                Err(e) => println!("  {src:<16} ! {e} (exit {})", e.exit_code()),
            }
        }
    }
}
