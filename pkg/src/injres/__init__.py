"""Exact computation of a minimal injective resolution over the local
hypersurface k[X,Y,Z,W]_(X,Y,Z,W)/(XW - YZ), and of the local cohomology,
Ext modules, Yoneda products and dual-module invariants that the resolution
carries."""
