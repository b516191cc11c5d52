//! Every invariant of the Petersen graph, with witnesses, as one JSON report.
//!
//! ```bash
//! cargo run --release --example petersen_battery
//! ```

use cubecore::families::petersen;
use cubecore::invariants::{invariant_report, ReportOptions};

fn main() -> cubecore::Result<()> {
    let p = petersen();
    let r = invariant_report(&p, &ReportOptions::all())?;
    println!(
        "n={} m={} girth={:?} pms={} gamma2={} oddness={} r3={:?}",
        r.n, r.m, r.girth, r.perfect_matchings, r.gamma2, r.oddness, r.resistance3
    );
    println!("mu2={:?} mu3={:?} mu4={:?}", r.mu2, r.mu3, r.mu4);
    println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
    Ok(())
}
