"""Package de tests pour nlfm."""
