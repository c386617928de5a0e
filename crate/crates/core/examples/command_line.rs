//! Driving the command layer from code, as the `preproj` binary does.
//!
//! ```bash
//! cargo run --example command_line
//! cargo run --bin preproj -- mutation-graph --dot --config '{"cartan": [[2,-1],[-2,2]]}'
//! ```

use preproj::cli::{parse_config, run_command, Command, OutputFormat};
use preproj::Result;

pub fn run() -> Result<()> {
    let mut cfg = parse_config(r#"{"cartan": [[2,-1],[-1,2]], "symmetrizer": [2,2]}"#)?;
    for cmd in [Command::Check, Command::Weyl, Command::Stt, Command::Verify] {
        let out = run_command(&cfg, cmd);
        println!("$ {cmd:?} (exit {})\n{}", out.code, out.stdout);
    }
    cfg.format = OutputFormat::Json;
    let out = run_command(&cfg, Command::MutationGraph);
    println!("$ MutationGraph --json (exit {})\n{}", out.code, out.stdout);

    let bad = parse_config(r#"{"cartan": [[2,-1],[-1,2]], "symmetrizer": [1,2]}"#);
    println!("bad symmetrizer: {}", bad.unwrap_err());
    Ok(())
}

fn main() -> Result<()> {
    run()
}
