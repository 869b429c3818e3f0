namespace aff { }
