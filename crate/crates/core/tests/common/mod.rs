#![allow(dead_code)]

use std::sync::Arc;

use qpm_core::dispersion::{Axis, MaterialDispersion, SellmeierForm, SellmeierModel, Window};
use qpm_core::process::{Geometry, PmProcess, Polarizations};

fn gayer(a: [f64; 10]) -> SellmeierModel {
    let mut c = a.to_vec();
    c.extend([24.5, 570.82]);
    SellmeierModel::new(SellmeierForm::Gayer, c).unwrap()
}

fn kato(a: [f64; 9]) -> SellmeierModel {
    let mut c = a[..5].to_vec();
    c.push(20.0);
    c.extend(a[5..].iter().map(|v| v * 1e-5));
    SellmeierModel::new(SellmeierForm::Kato, c).unwrap()
}

pub fn ppln() -> Arc<MaterialDispersion> {
    Arc::new(
        MaterialDispersion::new(
            "PPLN",
            "MgO:CLN",
            [
                (Axis::Y, gayer([5.653, 0.1185, 0.2091, 89.61, 10.85, 1.97e-2, 7.941e-7, 3.134e-8, -4.641e-9, -2.188e-6])),
                (Axis::Z, gayer([5.756, 0.0983, 0.2020, 189.32, 12.52, 1.32e-2, 2.860e-6, 4.700e-8, 6.113e-8, 1.516e-4])),
            ],
            Window::new(0.5, 4.0),
            Window::new(0.0, 200.0),
        )
        .unwrap(),
    )
}

pub fn ppslt() -> Arc<MaterialDispersion> {
    Arc::new(
        MaterialDispersion::new(
            "PPSLT",
            "MgO:SLT",
            [
                (Axis::Y, gayer([4.5082, 0.084888, 0.19552, 1.1570, 8.2517, 0.0237, 2.0704e-8, 1.4449e-8, 1.5978e-8, 4.7686e-6])),
                (Axis::Z, gayer([4.5615, 0.08488, 0.1927, 5.5832, 8.3067, 0.021696, 4.782e-7, 3.0913e-8, 2.7326e-8, 1.4837e-5])),
            ],
            Window::new(0.4, 4.0),
            Window::new(0.0, 200.0),
        )
        .unwrap(),
    )
}

pub fn ppktp() -> Arc<MaterialDispersion> {
    Arc::new(
        MaterialDispersion::new(
            "PPKTP",
            "KTP",
            [
                (Axis::X, kato([3.29100, 0.04140, 0.03978, 9.35522, 31.45571, 0.1717, -0.5353, 0.8416, 0.1627])),
                (Axis::Y, kato([3.45018, 0.04341, 0.04597, 16.98825, 39.43799, 0.1997, -0.4063, 0.5154, 0.5425])),
                (Axis::Z, kato([4.59423, 0.06206, 0.04763, 110.80672, 86.12171, 0.9221, -2.9220, 3.6677, -0.1897])),
            ],
            Window::new(0.43, 3.54),
            Window::new(0.0, 150.0),
        )
        .unwrap(),
    )
}

pub fn process(material: &Arc<MaterialDispersion>, pols: &str, order: u32, geometry: Geometry) -> PmProcess {
    PmProcess::degenerate(material.clone(), Polarizations::parse(pols).unwrap(), order, geometry).unwrap()
}

pub fn collinear(material: &Arc<MaterialDispersion>, pols: &str, order: u32) -> PmProcess {
    process(material, pols, order, Geometry::Collinear)
}

pub fn noncollinear(material: &Arc<MaterialDispersion>, pols: &str, order: u32) -> PmProcess {
    process(material, pols, order, Geometry::NonCollinear)
}

/// The three QPM types for each pump polarization.
pub const TRIPLES: [&str; 6] = ["o:o,o", "o:e,e", "o:e,o", "e:e,e", "e:o,o", "e:e,o"];
