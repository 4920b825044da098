//! Runs every verification target and prints the reports.

use cp2nine::verify::{verify, Target, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = VerifyOptions { seed: 7, ..Default::default() };
    let mut ok = true;
    for t in Target::EACH {
        let r = verify(t, &opts)?;
        print!("{}", r.to_text());
        ok &= r.all_pass(false);
    }
    println!("all pass: {ok}");
    Ok(())
}
