//! Runs every identity suite at a small size and prints the reports.

fn main() -> circloid::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for r in circloid::verify::run_all(max_n)? {
        println!("{r}");
    }
    Ok(())
}
