"""Executable pieces of the finitary consistency toolbox.

Submodules:

* ``ordinals``  -- nested-list ordinal notations below epsilon-zero
* ``descent``   -- weakly decreasing sequence programs and stabilization
* ``formulas``  -- first-order arithmetic syntax and bounded evaluation
* ``peano``     -- the arithmetic axiom base and the induction schema
* ``game``      -- the reduction game, strategy synthesis, ordinal measures
* ``proofs``    -- Hilbert-style proof checking and contradiction search
* ``cli``       -- command-line front end
* ``server``    -- HTTP API for playing the game in a browser
"""

__version__ = "0.1.0"
