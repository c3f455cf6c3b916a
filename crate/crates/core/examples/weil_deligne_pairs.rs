//! Steinberg parameters, the monodromy filtration, purity and base change.

use gsp4_core::weil_deligne::*;
use gsp4_core::Scalar;
use num_rational::BigRational;

fn main() {
    let q = BigRational::from_integer(3.into());
    let twist = Scalar::q_half_power(&q, 3).unwrap();
    let st = steinberg_parameter(SteinbergKind::Gsp4Steinberg, &q, &twist).unwrap();
    println!("Steinberg: rank {}, indecomposable {}", st.monodromy_rank(), is_indecomposable(&st));
    println!("graded weights: {:?}", graded_weights(&st).unwrap());
    println!("pure of weight 3: {}", purity_check(&st, 3).unwrap());

    let kl = steinberg_parameter(SteinbergKind::KlingenSt, &q, &Scalar::one()).unwrap();
    println!("Klingen type: rank {}, inertia of order {}", kl.monodromy_rank(), kl.model().inertia().order());

    let bc = local_base_change(&st, &QuadraticExtension::Unramified).unwrap();
    println!("after unramified base change: q = {}, rank {}", bc.q(), bc.monodromy_rank());

    let chi = WDPair::unramified_character(q.clone(), Scalar::from_i64(2)).unwrap();
    let w = wd_from_parameter(&SL2Parameter::uniform(chi, &[2, 1, 1]).unwrap()).unwrap();
    let ss = frobenius_semisimplify(&w).unwrap();
    println!("(2,1,1) parameter: rank {}, semisimplification fixes F: {}", w.monodromy_rank(), ss.frobenius() == w.frobenius());
}
