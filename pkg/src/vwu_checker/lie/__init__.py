"""Root systems, Weyl group actions and weight-polytope geometry."""
