// Driving the command-line interface from library code.

use homcount::cli::{run_command, CommandName, Format, Options};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let base = Options { input: Some("gl2r_h_r1".into()), ..Options::default() };
    for command in [CommandName::Poly, CommandName::Factor, CommandName::Period] {
        let out = run_command(command, &Options { format: Format::Text, ..base.clone() });
        println!("{command:?} (exit {}):\n{}", out.status, out.document);
    }
    let count = run_command(CommandName::Count, &Options { q: Some(3), n: Some(2), ..base.clone() });
    println!("{}", count.document);
    let latex = run_command(CommandName::Poly, &Options { format: Format::Latex, ..base });
    println!("{}", latex.document);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
