use surgeon_core::catalog::steane;
use surgeon_core::distance::{distance_exhaustive, subsystem_distance, Engine};
use surgeon_core::surgery::external_merge;
use surgeon_core::Basis;

#[test]
fn steane_self_merge() -> surgeon_core::Result<()> {
    let code = steane();
    let u = distance_exhaustive(&code, Basis::Z)?.witness;
    let merged = external_merge(&code, &code, &u, &u, Basis::Z, 1)?.expect("span exists");
    assert_eq!(merged.code.n(), 16);
    let d = subsystem_distance(&merged.subsystem, None, &Engine::exhaustive())?;
    assert_eq!(d.value, 3);
    Ok(())
}
