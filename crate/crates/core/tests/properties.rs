//! Randomized algebraic laws. Shapes stay small so each case is cheap;
//! the point is coverage of the map spaces, not of the sizes.

use proptest::prelude::*;

use ptwreath::{
    kernel_equivalent, phi, phi_section, BlockMap, MonoidElement, PartialMap, WreathElement,
    UNDEFINED,
};

fn partial_map(degree: usize) -> impl Strategy<Value = PartialMap> {
    prop::collection::vec(0..=degree, degree).prop_map(move |raw| {
        let images = raw
            .into_iter()
            .map(|v| if v == degree { UNDEFINED } else { v })
            .collect();
        PartialMap::from_images(images).expect("images in range")
    })
}

fn full_map(degree: usize) -> impl Strategy<Value = PartialMap> {
    prop::collection::vec(0..degree, degree)
        .prop_map(|images| PartialMap::from_images(images).expect("images in range"))
}

fn wreath(n: usize, m: usize) -> impl Strategy<Value = WreathElement> {
    (prop::collection::vec(partial_map(n), m), full_map(m))
        .prop_map(|(components, tail)| WreathElement::new(components, tail).expect("valid shape"))
}

/// A shape plus `COUNT` independent wreath elements of that shape.
fn wreath_tuple<const COUNT: usize>() -> impl Strategy<Value = Vec<WreathElement>> {
    (1usize..=3, 1usize..=3)
        .prop_flat_map(move |(n, m)| prop::collection::vec(wreath(n, m), COUNT))
}

fn maps_tuple<const COUNT: usize>() -> impl Strategy<Value = Vec<PartialMap>> {
    (1usize..=6).prop_flat_map(move |d| prop::collection::vec(partial_map(d), COUNT))
}

proptest! {
    #[test]
    fn composition_is_associative(maps in maps_tuple::<3>()) {
        let (a, b, c) = (&maps[0], &maps[1], &maps[2]);
        let left = a.compose(b).unwrap().compose(c).unwrap();
        let right = a.compose(&b.compose(c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral(maps in maps_tuple::<1>()) {
        let a = &maps[0];
        let e = a.identity_like();
        prop_assert_eq!(&e.compose(a).unwrap(), a);
        prop_assert_eq!(&a.compose(&e).unwrap(), a);
    }

    #[test]
    fn rank_never_grows(maps in maps_tuple::<2>()) {
        let (a, b) = (&maps[0], &maps[1]);
        let product = a.compose(b).unwrap();
        prop_assert!(product.rank() <= a.rank().min(b.rank()));
        prop_assert!(product.domain_size() <= a.domain_size());
    }

    #[test]
    fn partial_map_roundtrips_through_text(maps in maps_tuple::<1>()) {
        let a = &maps[0];
        prop_assert_eq!(&a.to_string().parse::<PartialMap>().unwrap(), a);
    }

    #[test]
    fn wreath_product_is_associative(xs in wreath_tuple::<3>()) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        let left = x.multiply(y).unwrap().multiply(z).unwrap();
        let right = x.multiply(&y.multiply(z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn wreath_identity_is_neutral(xs in wreath_tuple::<1>()) {
        let x = &xs[0];
        let e = WreathElement::identity(x.inner_degree(), x.outer_degree());
        prop_assert_eq!(&e.multiply(x).unwrap(), x);
        prop_assert_eq!(&x.multiply(&e).unwrap(), x);
    }

    #[test]
    fn wreath_roundtrips_through_text(xs in wreath_tuple::<1>()) {
        let x = &xs[0];
        prop_assert_eq!(&x.to_string().parse::<WreathElement>().unwrap(), x);
    }

    #[test]
    fn block_map_roundtrips_through_text(xs in wreath_tuple::<1>()) {
        let b = phi(&xs[0]);
        prop_assert_eq!(&b.to_string().parse::<BlockMap>().unwrap(), &b);
    }

    #[test]
    fn phi_is_a_homomorphism(xs in wreath_tuple::<2>()) {
        let (x, y) = (&xs[0], &xs[1]);
        let product = phi(&x.multiply(y).unwrap());
        prop_assert_eq!(product, phi(x).multiply(&phi(y)).unwrap());
    }

    #[test]
    fn canonical_form_is_an_idempotent_retraction(xs in wreath_tuple::<1>()) {
        let x = &xs[0];
        let c = x.canonical_form();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(&c.canonical_form(), &c);
        prop_assert!(kernel_equivalent(x, &c).unwrap());
        prop_assert_eq!(phi(&c), phi(x));
    }

    #[test]
    fn kernel_equivalence_matches_equal_images(xs in wreath_tuple::<2>()) {
        let (x, y) = (&xs[0], &xs[1]);
        prop_assert_eq!(kernel_equivalent(x, y).unwrap(), phi(x) == phi(y));
    }

    #[test]
    fn retargeting_empty_components_stays_in_the_fibre(
        xs in wreath_tuple::<1>(),
        seed in prop::collection::vec(0usize..3, 3),
    ) {
        let x = &xs[0];
        let m = x.outer_degree();
        // redirect the tail under every empty component, leave the rest alone
        let tail = PartialMap::from_images(
            (0..m)
                .map(|j| {
                    if x.components()[j].is_empty_map() {
                        seed[j % seed.len()] % m
                    } else {
                        x.tail().images()[j]
                    }
                })
                .collect(),
        )
        .unwrap();
        let y = WreathElement::new(x.components().to_vec(), tail).unwrap();
        prop_assert!(kernel_equivalent(x, &y).unwrap());
        prop_assert_eq!(phi(&y), phi(x));
    }

    #[test]
    fn section_is_a_right_inverse_of_phi(xs in wreath_tuple::<1>()) {
        let b = phi(&xs[0]);
        let lifted = phi_section(&b);
        prop_assert_eq!(phi(&lifted), b);
        prop_assert!(lifted.is_canonical());
        prop_assert_eq!(lifted, xs[0].canonical_form());
    }

    #[test]
    fn pow_matches_repeated_multiplication(xs in wreath_tuple::<1>(), k in 0u64..8) {
        let x = &xs[0];
        let mut expected = WreathElement::identity(x.inner_degree(), x.outer_degree());
        for _ in 0..k {
            expected = expected.multiply(x).unwrap();
        }
        prop_assert_eq!(x.pow(k), expected);
    }
}
