# main.py
"""
Main entry point for the Overpartition Explorer.
This script initializes and runs the Streamlit application.
"""

import streamlit as st
from overdurfee.pages.home import display_home
from overdurfee.pages.dissection import display_dissection
from overdurfee.pages.fibers import display_fibers
from overdurfee.pages.about import display_about

APP_TITLE = "Overpartition Explorer"
APP_ICON = "🔷"


def create_navigation_sidebar():
    """Sidebar navigation as a single radio widget."""
    st.sidebar.title("Navigation")

    navigation = st.sidebar.radio(
        "Select a page:",
        ["🏠 Home", "🔲 Dissection", "🔀 Fibers", "ℹ️ About"],
        key="sidebar_radio",
        label_visibility="collapsed"
    )

    nav_map = {
        "🏠 Home": "Home",
        "🔲 Dissection": "Dissection",
        "🔀 Fibers": "Fibers",
        "ℹ️ About": "About"
    }

    if nav_map[navigation] != st.session_state.navigation:
        st.session_state.navigation = nav_map[navigation]
        st.rerun()


def main():
    """Main application entry point."""
    st.set_page_config(
        page_title=APP_TITLE,
        page_icon=APP_ICON,
        layout="wide",
        initial_sidebar_state="expanded"
    )

    if "navigation" not in st.session_state:
        st.session_state.navigation = "Home"

    create_navigation_sidebar()

    # Page dispatch
    page = st.session_state.navigation
    if page == "Home":
        display_home()
    elif page == "Dissection":
        display_dissection()
    elif page == "Fibers":
        display_fibers()
    elif page == "About":
        display_about()


if __name__ == "__main__":
    main()
