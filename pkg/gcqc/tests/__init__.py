"""Tests for gcqc."""
