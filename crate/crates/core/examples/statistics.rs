//! Statistics of a permutation and joint distributions over a class.

use comtet::engine::joint_distribution;
use comtet::perm::{patterns, perm};
use comtet::stats::{self, Stat, StatProfile};
use comtet::Var;

fn main() -> comtet::Result<()> {
    let pi = perm("3 1 2 5 4 7 6");
    println!("pi = {pi}");
    println!("DES = {:?}, DESB = {:?}", stats::des_set(&pi), stats::desb_set(&pi));
    println!("LMAX = {:?} at {:?}, LMIN = {:?}", stats::lmax_set(&pi), stats::lmaxp_set(&pi), stats::lmin_set(&pi));
    println!("iar = {}, comp = {}, components = {:?}", stats::iar(&pi), stats::comp(&pi), pi.decompose());
    println!("dd = {}, dd0 = {}, ddinf = {}", stats::dd(&pi)?, stats::dd0(&pi)?, stats::ddinf(&pi)?);
    println!("{:?}", StatProfile::of(&pi));

    let st = [(Stat::Des, Var::T), (Stat::Dd, Var::X), (Stat::Iar, Var::Y)];
    for key in ["2413,3142", "2413,4213"] {
        println!("(des, dd, iar) over S_4({key}): {}", joint_distribution(4, &patterns(key), &st));
    }
    Ok(())
}
